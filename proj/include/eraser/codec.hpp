// Surface coding of erasers: !n is carried by the 8-letter alphabet
// {0,1,A,B,C,D,E,Z} as the segment A B^n C^n D^n E^n Z.  The tokenizer is
// the authoritative definition of a "wrong code": any A-initiated segment
// that fails the exact pattern, and any stray code character, yields a
// Malformed token.  W is the set of surface words hosting at least one.
//
// Tokenization is a left-to-right maximal-munch scan.  On 'A' the scanner
// consumes A B* C* D* E* Z? greedily (blocks in that order, stopping at the
// first character that cannot extend the attempt); the consumed span is an
// EraserCode(n) iff it is exactly A B^n C^n D^n E^n Z with n >= 1, and a
// Malformed span otherwise.  A B/C/D/E/Z met outside an attempt is a
// Malformed span of length 1.

#ifndef ERASER_CODEC_HPP
#define ERASER_CODEC_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "eraser/word.hpp"

namespace eraser {

inline bool is_code_char(char c) {
    return c == 'A' || c == 'B' || c == 'C' || c == 'D' || c == 'E' || c == 'Z';
}

struct Token {
    enum class Kind { Letter, EraserCode, Malformed };
    Kind kind;
    int value;          // bit for Letter, index n for EraserCode
    std::size_t begin;  // 1-based char span [begin, end], inclusive
    std::size_t end;

    bool operator==(const Token&) const = default;
};

inline EncodedWord encode(const Word& w) {
    EncodedWord out;
    for (std::size_t i = 1; i <= w.size(); ++i) {
        const Symbol& s = w.at(i);
        if (s.is_letter()) {
            out += static_cast<char>('0' + s.value);
        } else if (s.is_eraser() && s.value >= 1) {
            out += 'A';
            out.append(static_cast<std::size_t>(s.value), 'B');
            out.append(static_cast<std::size_t>(s.value), 'C');
            out.append(static_cast<std::size_t>(s.value), 'D');
            out.append(static_cast<std::size_t>(s.value), 'E');
            out += 'Z';
        } else {
            throw std::domain_error("encode: symbol at position " + std::to_string(i) +
                                    " has no surface code");
        }
    }
    return out;
}

inline std::vector<Token> tokenize(const EncodedWord& e) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = e.size();
    while (i < n) {
        char c = e[i];
        if (c == '0' || c == '1') {
            out.push_back({Token::Kind::Letter, c - '0', i + 1, i + 1});
            ++i;
            continue;
        }
        if (c != 'A') {
            // stray code char, or a character outside the surface alphabet
            out.push_back({Token::Kind::Malformed, 0, i + 1, i + 1});
            ++i;
            continue;
        }
        // attempt A B* C* D* E* Z?
        std::size_t start = i;
        ++i;
        std::size_t b = 0, cc = 0, d = 0, ee = 0;
        while (i < n && e[i] == 'B') ++b, ++i;
        while (i < n && e[i] == 'C') ++cc, ++i;
        while (i < n && e[i] == 'D') ++d, ++i;
        while (i < n && e[i] == 'E') ++ee, ++i;
        bool closed = (i < n && e[i] == 'Z');
        if (closed) ++i;
        bool ok = closed && b >= 1 && b == cc && cc == d && d == ee;
        if (ok)
            out.push_back({Token::Kind::EraserCode, static_cast<int>(b), start + 1, i});
        else
            out.push_back({Token::Kind::Malformed, 0, start + 1, i});
    }
    return out;
}

inline bool has_wrong_code(const EncodedWord& e) {
    for (const Token& t : tokenize(e))
        if (t.kind == Token::Kind::Malformed) return true;
    return false;
}

inline Word decode(const EncodedWord& e) {
    Word w;
    for (const Token& t : tokenize(e)) {
        switch (t.kind) {
            case Token::Kind::Letter:
                w.push_back(Symbol::letter(t.value));
                break;
            case Token::Kind::EraserCode:
                w.push_back(Symbol::eraser(t.value));
                break;
            case Token::Kind::Malformed:
                throw std::domain_error("decode: wrong code at chars [" +
                                        std::to_string(t.begin) + ", " +
                                        std::to_string(t.end) + "]");
        }
    }
    return w;
}

}  // namespace eraser

#endif
