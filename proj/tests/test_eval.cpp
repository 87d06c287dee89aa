#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "eraser/eval.hpp"
#include "eraser/word.hpp"

using namespace eraser;

namespace {

// Independent oracle for the single-eraser pass: rewrite semantics.  Delete
// the leftmost factor "s !e" with s != !e until no eraser is left; an !e
// with nothing before it makes the result undefined at its original
// position.  Positions are tracked through the rewriting.
EvalOutcome rewrite_oracle(const Word& w, int e) {
    std::vector<std::pair<Symbol, std::size_t>> v;
    for (std::size_t i = 1; i <= w.size(); ++i) v.emplace_back(w.at(i), i);
    auto is_e = [&](const Symbol& s) { return s.is_eraser() && s.value == e; };
    while (true) {
        bool changed = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!is_e(v[i].first)) continue;
            if (i == 0) return EvalOutcome::undefined_at(v[i].second);
            if (is_e(v[i - 1].first)) continue;  // cannot erase an unevaluated !e yet
            v.erase(v.begin() + i - 1, v.begin() + i + 1);
            changed = true;
            break;
        }
        if (!changed) break;
    }
    Word out;
    for (auto& [s, p] : v) {
        if (is_e(s)) return EvalOutcome::undefined_at(p);
        out.push_back(s);
    }
    return EvalOutcome::defined(std::move(out));
}

Word random_word(std::mt19937_64& rng, std::size_t max_len, int max_index) {
    Word w;
    std::size_t len = rng() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) {
        if (rng() % 2)
            w.push_back(Symbol::letter(static_cast<int>(rng() % 2)));
        else
            w.push_back(Symbol::eraser(1 + static_cast<int>(rng() % max_index)));
    }
    return w;
}

}  // namespace

TEST_CASE("erase_one follows the backspace rules") {
    CHECK(erase_one(parse_symbolic("0 1 !1"), 1) ==
          EvalOutcome::defined(parse_symbolic("0")));
    // a leading eraser erases the empty sequence
    CHECK(erase_one(parse_symbolic("!1 0"), 1) == EvalOutcome::undefined_at(1));
    // !1 erases the unevaluated !2 standing before it
    CHECK(erase_one(parse_symbolic("1 !2 !1 1"), 1) ==
          EvalOutcome::defined(parse_symbolic("1 1")));
    // (a!)(a!) cancels exactly
    CHECK(erase_one(parse_symbolic("0 1 !1 !1"), 1) == EvalOutcome::defined(Word{}));
}

TEST_CASE("erase_one cross-checked against the rewrite oracle") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 5000; ++it) {
        Word w = random_word(rng, 12, 3);
        int e = 1 + static_cast<int>(rng() % 3);
        CHECK(erase_one(w, e) == rewrite_oracle(w, e));
    }
}

TEST_CASE("erase_or_default substitutes the fallback when undefined") {
    Word zero = parse_symbolic("0");
    CHECK(erase_or_default(parse_symbolic("!1"), 1, zero) == zero);
    CHECK(erase_or_default(parse_symbolic("1"), 1, zero) == parse_symbolic("1"));
    CHECK(erase_or_default(parse_symbolic("0 !1 1"), 1, zero) == parse_symbolic("1"));
}

TEST_CASE("erase_cascade runs stages in increasing index order") {
    CascadeTrace tr = erase_cascade(parse_symbolic("0 !2 !1 0 1"), 2);
    REQUIRE(tr.stages.size() == 2);
    CHECK(tr.stages[0].second == EvalOutcome::defined(parse_symbolic("0 0 1")));
    CHECK(tr.stages[1].second == EvalOutcome::defined(parse_symbolic("0 0 1")));
    CHECK(tr.final == EvalOutcome::defined(parse_symbolic("0 0 1")));

    tr = erase_cascade(parse_symbolic("0 1 !2 !1 1"), 2);
    CHECK(tr.final == EvalOutcome::defined(parse_symbolic("0 1 1")));

    tr = erase_cascade(parse_symbolic("1"), 3);
    REQUIRE(tr.stages.size() == 3);
    CHECK(tr.final == EvalOutcome::defined(parse_symbolic("1")));
}

TEST_CASE("erase_cascade stops at the first undefined stage") {
    CascadeTrace tr = erase_cascade(parse_symbolic("!2 1"), 2);
    REQUIRE(tr.stages.size() == 2);  // stage 1 is identity, stage 2 undefined
    CHECK(tr.stages[1].second == EvalOutcome::undefined_at(1));
    CHECK_FALSE(tr.final.is_defined);
}

TEST_CASE("erase_cascade rejects out-of-range indices") {
    CHECK_THROWS_AS(erase_cascade(parse_symbolic("!3"), 2), std::domain_error);
}

TEST_CASE("is_ln_member checks cascade plus 0*1 residue") {
    CHECK(is_ln_member(parse_symbolic("0 !2 !1 0 1"), 2));
    CHECK_FALSE(is_ln_member(parse_symbolic("0 1 !2 !1 1"), 2));
    CHECK(is_ln_member(parse_symbolic("1"), 1));
    CHECK_FALSE(is_ln_member(parse_symbolic("!1 1"), 1));
    CHECK_THROWS_AS(is_ln_member(parse_symbolic("!2"), 1), std::domain_error);
}

TEST_CASE("padding with identity passes does not change the cascade") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 2000; ++it) {
        Word w = random_word(rng, 10, 2);
        CascadeTrace t2 = erase_cascade(w, 2);
        CascadeTrace t4 = erase_cascade(w, 4);
        CHECK(t2.final == t4.final);
    }
}

TEST_CASE("definedness matches the prefix-count criterion for one eraser") {
    // exhaustive over {0, 1, !1} up to length 9; the acceptance suite
    // pushes this to length 12
    std::vector<Symbol> alpha = {Symbol::letter(0), Symbol::letter(1), Symbol::eraser(1)};
    for (std::size_t len = 0; len <= 9; ++len) {
        std::vector<std::size_t> idx(len, 0);
        while (true) {
            Word w;
            for (std::size_t i = 0; i < len; ++i) w.push_back(alpha[idx[i]]);
            std::size_t erasers = 0;
            bool criterion = true;
            std::size_t count = 0;
            for (std::size_t i = 0; i < len; ++i) {
                if (w.syms[i].is_eraser()) {
                    ++count;
                    ++erasers;
                    if (2 * count > i + 1) criterion = false;
                }
            }
            EvalOutcome o = erase_one(w, 1);
            CHECK(o.is_defined == criterion);
            if (o.is_defined) {
                CHECK(o.result.size() == len - 2 * erasers);
                for (const Symbol& s : o.result.syms) CHECK_FALSE(s.is_eraser());
            }
            std::size_t i = len;
            while (i > 0 && ++idx[i - 1] == alpha.size()) idx[i - 1] = 0, --i;
            if (i == 0) break;
        }
    }
}

TEST_CASE("limit_prefix depends on the adversary's available erasers") {
    CHECK(limit_prefix(parse_symbolic("1 0"), {}) == parse_symbolic("1 0"));
    CHECK(limit_prefix(parse_symbolic("1 0"), {1}) == Word{});
    CHECK(limit_prefix(parse_symbolic("0 !1 1"), {}) == parse_symbolic("1"));
    CHECK(limit_prefix(parse_symbolic("!1"), {}) == Word{});  // undefined cascade
}
