// Symbols, words and the two textual formats (symbolic and encoded surface)
// shared by every other header in this library.
//
// A word is a finite sequence over three kinds of symbols:
//   - letters 0 and 1,
//   - indexed erasers !k (k >= 1); !0 is the distinguished strongest eraser
//     used only by the Wadge-game strategies,
//   - code characters A,B,C,D,E,Z, which only ever occur in encoded-surface
//     contexts (see codec.hpp) and never in decoded symbolic words.
//
// Word indexing is 1-based: w.at(i) is the i-th symbol, w.prefix(i) the
// prefix of length i, w.prefix(0) the empty word.

#ifndef ERASER_WORD_HPP
#define ERASER_WORD_HPP

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace eraser {

enum class SymKind { Letter, Eraser, Code };

struct Symbol {
    SymKind kind;
    // Letter: bit 0/1.  Eraser: index >= 0.  Code: the surface character.
    int value;

    static Symbol letter(int bit) { return {SymKind::Letter, bit}; }
    static Symbol eraser(int index) { return {SymKind::Eraser, index}; }
    static Symbol code(char c) { return {SymKind::Code, c}; }

    bool is_letter() const { return kind == SymKind::Letter; }
    bool is_eraser() const { return kind == SymKind::Eraser; }
    bool is_code() const { return kind == SymKind::Code; }

    bool operator==(const Symbol&) const = default;
};

struct Word {
    std::vector<Symbol> syms;

    Word() = default;
    explicit Word(std::vector<Symbol> s) : syms(std::move(s)) {}

    std::size_t size() const { return syms.size(); }
    bool empty() const { return syms.empty(); }

    // 1-based, matching the v(i) convention.
    const Symbol& at(std::size_t i) const {
        if (i < 1 || i > syms.size())
            throw std::out_of_range("Word::at: index " + std::to_string(i));
        return syms[i - 1];
    }

    // Prefix of length i; prefix(0) is the empty word.
    Word prefix(std::size_t i) const {
        if (i > syms.size())
            throw std::out_of_range("Word::prefix: length " + std::to_string(i));
        return Word(std::vector<Symbol>(syms.begin(), syms.begin() + i));
    }

    void push_back(Symbol s) { syms.push_back(s); }

    bool operator==(const Word&) const = default;
};

// Surface strings over {0,1,A,B,C,D,E,Z}; well-formedness is the codec's
// concern, not a type invariant.
using EncodedWord = std::string;

// --- symbolic text format ---------------------------------------------------
//
// Whitespace-separated tokens: "0", "1", "!k" for a decimal index k >= 0.

inline Word parse_symbolic(const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    std::size_t pos = 0;
    while (in >> tok) {
        ++pos;
        auto bad = [&]() {
            throw std::invalid_argument("parse_symbolic: malformed token \"" + tok +
                                        "\" at position " + std::to_string(pos));
        };
        if (tok == "0") {
            w.push_back(Symbol::letter(0));
        } else if (tok == "1") {
            w.push_back(Symbol::letter(1));
        } else if (tok.size() >= 2 && tok[0] == '!') {
            for (std::size_t i = 1; i < tok.size(); ++i)
                if (tok[i] < '0' || tok[i] > '9') bad();
            if (tok.size() > 2 && tok[1] == '0') bad();  // no leading zeros
            if (tok.size() > 10) bad();
            w.push_back(Symbol::eraser(std::stoi(tok.substr(1))));
        } else {
            bad();
        }
    }
    return w;
}

inline std::string render_symbolic(const Word& w) {
    std::string out;
    for (std::size_t i = 1; i <= w.size(); ++i) {
        const Symbol& s = w.at(i);
        if (s.is_code())
            throw std::domain_error("render_symbolic: code character at position " +
                                    std::to_string(i));
        if (i > 1) out += ' ';
        if (s.is_letter())
            out += static_cast<char>('0' + s.value);
        else
            out += "!" + std::to_string(s.value);
    }
    return out;
}

}  // namespace eraser

#endif
