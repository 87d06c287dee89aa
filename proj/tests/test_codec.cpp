#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "eraser/codec.hpp"
#include "eraser/word.hpp"

using namespace eraser;

namespace {

Word random_symbolic(std::mt19937_64& rng, std::size_t max_len, int max_index) {
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

TEST_CASE("encode maps erasers to their block codes") {
    CHECK(encode(parse_symbolic("0 !1 1")) == "0ABCDEZ1");
    CHECK(encode(parse_symbolic("!2")) == "ABBCCDDEEZ");
    CHECK(encode(Word{}) == "");
    CHECK_THROWS_AS(encode(parse_symbolic("!0")), std::domain_error);
    CHECK_THROWS_AS(encode(Word({Symbol::code('B')})), std::domain_error);
}

TEST_CASE("tokenize splits clean words into letters and codes") {
    auto toks = tokenize("0ABCDEZ1");
    REQUIRE(toks.size() == 3);
    CHECK(toks[0] == Token{Token::Kind::Letter, 0, 1, 1});
    CHECK(toks[1] == Token{Token::Kind::EraserCode, 1, 2, 7});
    CHECK(toks[2] == Token{Token::Kind::Letter, 1, 8, 8});
}

TEST_CASE("tokenize flags unequal blocks as one malformed span") {
    auto toks = tokenize("ABBCDEZ");
    REQUIRE(toks.size() == 1);
    CHECK(toks[0].kind == Token::Kind::Malformed);
    CHECK(toks[0].begin == 1);
    CHECK(toks[0].end == 7);
}

TEST_CASE("tokenize flags stray code characters singly") {
    auto toks = tokenize("B");
    REQUIRE(toks.size() == 1);
    CHECK(toks[0] == Token{Token::Kind::Malformed, 0, 1, 1});

    toks = tokenize("ZC1");
    REQUIRE(toks.size() == 3);
    CHECK(toks[0].kind == Token::Kind::Malformed);
    CHECK(toks[1].kind == Token::Kind::Malformed);
    CHECK(toks[2].kind == Token::Kind::Letter);
}

TEST_CASE("tokenize handles truncated and interleaved attempts") {
    // trailing incomplete code
    auto toks = tokenize("0ABBC");
    REQUIRE(toks.size() == 2);
    CHECK(toks[1] == Token{Token::Kind::Malformed, 0, 2, 5});
    // interior A restarts the attempt
    toks = tokenize("ABAZ");
    REQUIRE(toks.size() == 2);
    CHECK(toks[0] == Token{Token::Kind::Malformed, 0, 1, 2});
    CHECK(toks[1] == Token{Token::Kind::Malformed, 0, 3, 4});
}

TEST_CASE("tokenize is total: every character belongs to exactly one token") {
    std::mt19937_64 rng(5);
    const std::string alpha = "01ABCDEZ";
    for (int it = 0; it < 3000; ++it) {
        std::string e;
        std::size_t len = rng() % 20;
        for (std::size_t i = 0; i < len; ++i) e += alpha[rng() % alpha.size()];
        auto toks = tokenize(e);
        std::size_t next = 1;
        for (const Token& t : toks) {
            CHECK(t.begin == next);
            CHECK(t.end >= t.begin);
            next = t.end + 1;
        }
        CHECK(next == e.size() + 1);
    }
}

TEST_CASE("has_wrong_code spots malformed tokens") {
    CHECK_FALSE(has_wrong_code("0ABCDEZ1"));
    CHECK(has_wrong_code("1ABBCDEZ0"));
    CHECK_FALSE(has_wrong_code("01"));
    CHECK_FALSE(has_wrong_code(""));
    CHECK(has_wrong_code("AZ"));
}

TEST_CASE("decode inverts encode and rejects wrong codes") {
    CHECK(decode("0ABCDEZ1") == parse_symbolic("0 !1 1"));
    CHECK(decode("") == Word{});
    CHECK_THROWS_AS(decode("AZ"), std::domain_error);
}

TEST_CASE("decode after encode is the identity; encode is always clean") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 5000; ++it) {
        Word w = random_symbolic(rng, 20, 6);
        EncodedWord e = encode(w);
        CHECK_FALSE(has_wrong_code(e));
        CHECK(decode(e) == w);
    }
}

TEST_CASE("wrongness is preserved under clean-boundary concatenation") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 2000; ++it) {
        // host: some word with a wrong code; neighbors: clean encodings
        std::string host = "AB";  // truncated code
        switch (rng() % 3) {
            case 0: host = "ABBCDEZ"; break;
            case 1: host = "Z"; break;
            default: break;
        }
        EncodedWord u = encode(random_symbolic(rng, 6, 3));
        EncodedWord v = encode(random_symbolic(rng, 6, 3));
        CHECK(has_wrong_code(u + host + v));
    }
}
