#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "eraser/word.hpp"

using namespace eraser;

TEST_CASE("parse_symbolic maps tokens directly") {
    Word w = parse_symbolic("0 1 !1");
    REQUIRE(w.size() == 3);
    CHECK(w.at(1) == Symbol::letter(0));
    CHECK(w.at(2) == Symbol::letter(1));
    CHECK(w.at(3) == Symbol::eraser(1));
}

TEST_CASE("parse_symbolic accepts the empty input and the strongest eraser") {
    CHECK(parse_symbolic("").empty());
    Word w = parse_symbolic("!0");
    REQUIRE(w.size() == 1);
    CHECK(w.at(1) == Symbol::eraser(0));
}

TEST_CASE("parse_symbolic reports the offending token and position") {
    CHECK_THROWS_WITH_AS(parse_symbolic("0 !x"),
                         doctest::Contains("position 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_symbolic("2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_symbolic("!"), std::invalid_argument);
    CHECK_THROWS_AS(parse_symbolic("!01"), std::invalid_argument);
}

TEST_CASE("render_symbolic is the direct inverse map") {
    CHECK(render_symbolic(Word({Symbol::letter(1), Symbol::eraser(2)})) == "1 !2");
    CHECK(render_symbolic(Word{}) == "");
    CHECK_THROWS_AS(render_symbolic(Word({Symbol::code('A')})), std::domain_error);
}

TEST_CASE("word indexing is 1-based with prefix conventions") {
    Word w = parse_symbolic("0 !3 1");
    CHECK(w.at(1) == Symbol::letter(0));
    CHECK(w.prefix(0) == Word{});
    CHECK(w.prefix(2) == parse_symbolic("0 !3"));
    CHECK_THROWS_AS(w.at(0), std::out_of_range);
    CHECK_THROWS_AS(w.at(4), std::out_of_range);
}

TEST_CASE("round trip: parse after render is the identity on code-free words") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 2000; ++it) {
        Word w;
        std::size_t len = rng() % 16;
        for (std::size_t i = 0; i < len; ++i) {
            if (rng() % 2)
                w.push_back(Symbol::letter(static_cast<int>(rng() % 2)));
            else
                w.push_back(Symbol::eraser(static_cast<int>(rng() % 9)));
        }
        CHECK(parse_symbolic(render_symbolic(w)) == w);
    }
}

TEST_CASE("round trip: render after parse normalizes whitespace only") {
    CHECK(render_symbolic(parse_symbolic("  0   1\t!2 ")) == "0 1 !2");
}
