// Eraser evaluation: the single-eraser backspace pass, the iterated cascade
// over increasing eraser indices, L_n membership, and the stabilized-prefix
// approximation of the limit word.
//
// A single pass over eraser index e scans the word left to right: any symbol
// other than !e is appended to the surviving word; each occurrence of !e
// removes the last surviving symbol.  The pass is undefined at the first !e
// that finds the surviving word empty.
//
// The cascade applies passes for k = 1, 2, ..., max_index in that order,
// so lower-indexed erasers act first; !k can therefore erase !j only when
// j > k, since !j is still unevaluated at stage k.

#ifndef ERASER_EVAL_HPP
#define ERASER_EVAL_HPP

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eraser/word.hpp"

namespace eraser {

struct EvalOutcome {
    bool is_defined;
    Word result;           // valid iff is_defined
    std::size_t position;  // 1-based position of the offending eraser, iff !is_defined

    static EvalOutcome defined(Word w) { return {true, std::move(w), 0}; }
    static EvalOutcome undefined_at(std::size_t p) { return {false, Word{}, p}; }

    bool operator==(const EvalOutcome&) const = default;
};

struct CascadeTrace {
    // One (eraser index, outcome) entry per executed stage, in increasing
    // index order; stages stop at the first undefined outcome.
    std::vector<std::pair<int, EvalOutcome>> stages;
    EvalOutcome final;
};

inline EvalOutcome erase_one(const Word& w, int e) {
    Word out;
    for (std::size_t i = 1; i <= w.size(); ++i) {
        const Symbol& s = w.at(i);
        if (s.is_eraser() && s.value == e) {
            if (out.empty()) return EvalOutcome::undefined_at(i);
            out.syms.pop_back();
        } else {
            out.push_back(s);
        }
    }
    return EvalOutcome::defined(std::move(out));
}

inline Word erase_or_default(const Word& w, int e, const Word& fallback) {
    EvalOutcome o = erase_one(w, e);
    return o.is_defined ? o.result : fallback;
}

inline CascadeTrace erase_cascade(const Word& w, int max_index) {
    if (max_index < 1) throw std::domain_error("erase_cascade: max_index must be >= 1");
    for (std::size_t i = 1; i <= w.size(); ++i) {
        const Symbol& s = w.at(i);
        if (s.is_eraser() && s.value > max_index)
            throw std::domain_error("erase_cascade: eraser index " +
                                    std::to_string(s.value) + " exceeds max_index");
    }
    CascadeTrace tr;
    Word cur = w;
    for (int k = 1; k <= max_index; ++k) {
        EvalOutcome o = erase_one(cur, k);
        tr.stages.emplace_back(k, o);
        if (!o.is_defined) {
            tr.final = o;
            return tr;
        }
        cur = o.result;
    }
    tr.final = EvalOutcome::defined(std::move(cur));
    return tr;
}

// Membership in L_n: the cascade over stages 1..n is defined throughout and
// the residue lies in 0*1.
inline bool matches_zero_star_one(const Word& w) {
    if (w.empty()) return false;
    for (std::size_t i = 1; i + 1 <= w.size(); ++i)
        if (!(w.at(i).is_letter() && w.at(i).value == 0)) return false;
    return w.at(w.size()).is_letter() && w.at(w.size()).value == 1;
}

inline bool is_ln_member(const Word& w, int n) {
    if (n < 1) throw std::domain_error("is_ln_member: n must be >= 1");
    for (std::size_t i = 1; i <= w.size(); ++i) {
        const Symbol& s = w.at(i);
        if (s.is_code())
            throw std::domain_error("is_ln_member: code character in word");
        if (s.is_eraser() && (s.value < 1 || s.value > n))
            throw std::domain_error("is_ln_member: eraser index out of range");
    }
    CascadeTrace tr = erase_cascade(w, n);
    return tr.final.is_defined && matches_zero_star_one(tr.final.result);
}

// Longest prefix of the cascade residue that no future extension of w can
// disturb, relative to the eraser indices an adversary may still append.
//
// The residue after a full cascade contains no erasers, and an appended !i
// (repeated) erases surviving symbols from the right end one by one, at
// stage i.  So with any index available to the adversary every surviving
// symbol is reachable and only the empty prefix is stable; with no index
// available the whole residue is stable.
inline Word limit_prefix(const Word& w, const std::set<int>& available_indices = {}) {
    int max_index = 0;
    for (const Symbol& s : w.syms)
        if (s.is_eraser()) max_index = std::max(max_index, s.value);
    Word residue;
    if (max_index == 0) {
        residue = w;
    } else {
        CascadeTrace tr = erase_cascade(w, max_index);
        if (!tr.final.is_defined) return Word{};
        residue = tr.final.result;
    }
    if (!available_indices.empty()) return Word{};
    return residue;
}

}  // namespace eraser

#endif
