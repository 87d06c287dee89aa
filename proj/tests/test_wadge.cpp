#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <vector>

#include "eraser/codec.hpp"
#include "eraser/wadge.hpp"
#include "eraser/word.hpp"

using namespace eraser;

namespace {

std::vector<Symbol> random_script(std::mt19937_64& rng, std::size_t len,
                                  int max_index, bool allow_strongest) {
    std::vector<Symbol> s;
    for (std::size_t i = 0; i < len; ++i) {
        if (rng() % 2) {
            s.push_back(Symbol::letter(static_cast<int>(rng() % 2)));
        } else {
            int lo = allow_strongest ? 0 : 1;
            s.push_back(Symbol::eraser(lo + static_cast<int>(rng() % (max_index + 1 - lo))));
        }
    }
    return s;
}

}  // namespace

TEST_CASE("the shift strategy bumps every eraser index by one") {
    Strategy s = shift_strategy();
    CHECK(s(parse_symbolic("!3")) == Move::play(Symbol::eraser(4)));
    CHECK(s(parse_symbolic("!0")) == Move::play(Symbol::eraser(1)));
    CHECK(s(parse_symbolic("0 1")) == Move::play(Symbol::letter(1)));
    CHECK_THROWS_AS(s(Word({Symbol::code('A')})), std::invalid_argument);
}

TEST_CASE("run_play pairs moves round by round") {
    auto script = std::vector<Symbol>{Symbol::letter(0), Symbol::eraser(1),
                                      Symbol::letter(1)};
    Play p = run_play(script, shift_strategy(), 3);
    REQUIRE(p.rounds.size() == 3);
    CHECK(p.x_i() == parse_symbolic("0 !1 1"));
    CHECK(p.x_ii() == parse_symbolic("0 !2 1"));
    CHECK_THROWS_AS(run_play(script, shift_strategy(), 4), std::invalid_argument);
}

TEST_CASE("skipped moves drop out of player II's word") {
    Strategy skip_erasers = [](const Word& h) {
        const Symbol& s = h.at(h.size());
        return s.is_eraser() ? Move::make_skip() : Move::play(s);
    };
    Play p = run_play({Symbol::letter(0), Symbol::eraser(1), Symbol::letter(1)},
                      skip_erasers, 3);
    CHECK(p.x_ii() == parse_symbolic("0 1"));
}

TEST_CASE("copy_rename_strategy renames erasers monotonically") {
    Strategy s = copy_rename_strategy({{1, 2}, {2, 5}});
    CHECK(s(parse_symbolic("!1")) == Move::play(Symbol::eraser(2)));
    CHECK(s(parse_symbolic("!2")) == Move::play(Symbol::eraser(5)));
    CHECK(s(parse_symbolic("!3")) == Move::play(Symbol::eraser(3)));  // unmapped
    CHECK(s(parse_symbolic("0")) == Move::play(Symbol::letter(0)));
    CHECK_THROWS_AS(copy_rename_strategy({{1, 4}, {2, 3}}), std::domain_error);
}

TEST_CASE("priority_cascade runs the strongest eraser first") {
    // !0 is stronger than !1, so it erases the pending !1
    CascadeTrace tr = priority_cascade(parse_symbolic("0 !1 !0 0 1"));
    REQUIRE(tr.stages.size() == 2);
    CHECK(tr.stages[0].first == 0);
    CHECK(tr.stages[0].second == EvalOutcome::defined(parse_symbolic("0 0 1")));
    CHECK(tr.stages[1].first == 1);
    CHECK(tr.final == EvalOutcome::defined(parse_symbolic("0 0 1")));

    // absent indices contribute no stage
    tr = priority_cascade(parse_symbolic("0 !3 1"));
    REQUIRE(tr.stages.size() == 1);
    CHECK(tr.stages[0].first == 3);
    CHECK(tr.final == EvalOutcome::defined(parse_symbolic("1")));

    tr = priority_cascade(parse_symbolic("!2 1"));
    CHECK_FALSE(tr.final.is_defined);
}

TEST_CASE("check_shift_invariant holds on hand-picked shift plays") {
    for (const char* script : {"0 !1 1", "0 !0 1", "!1 0", "0 1 !2 !1 1",
                               "0 !0 !1 1", ""}) {
        Word w = parse_symbolic(script);
        Play p = run_play(w.syms, shift_strategy(), w.size());
        CHECK(check_shift_invariant(p));
    }
}

TEST_CASE("check_shift_invariant rejects a broken strategy") {
    // copying without shifting breaks the stage correspondence
    Strategy copy = [](const Word& h) { return Move::play(h.at(h.size())); };
    Word w = parse_symbolic("0 !1 1");
    CHECK_FALSE(check_shift_invariant(run_play(w.syms, copy, w.size())));

    // mapping !0 and !1 to the same index collapses two stages into one
    Strategy collapse = [](const Word& h) {
        const Symbol& s = h.at(h.size());
        if (s.is_eraser()) return Move::play(Symbol::eraser(std::max(1, s.value)));
        return Move::play(s);
    };
    Word v = parse_symbolic("0 !0 !1 1");
    CHECK_FALSE(check_shift_invariant(run_play(v.syms, collapse, v.size())));
}

TEST_CASE("the shift invariant holds on random scripts") {
    std::mt19937_64 rng(67);
    for (int it = 0; it < 3000; ++it) {
        auto script = random_script(rng, rng() % 13, 3, true);
        Play p = run_play(script, shift_strategy(), script.size());
        CHECK(check_shift_invariant(p));
    }
}

TEST_CASE("the horizon overload truncates the play") {
    Word w = parse_symbolic("0 !1 1 0");
    Play p = run_play(w.syms, shift_strategy(), w.size());
    for (std::size_t h = 0; h <= 6; ++h) CHECK(check_shift_invariant(p, h));
}

TEST_CASE("strategy outputs encode without wrong codes") {
    std::mt19937_64 rng(71);
    for (int it = 0; it < 1000; ++it) {
        auto script = random_script(rng, rng() % 10, 3, false);
        Play p = run_play(script, copy_rename_strategy({{1, 2}, {2, 4}, {3, 7}}),
                          script.size());
        CHECK_FALSE(has_wrong_code(encode(p.x_ii())));
    }
}
