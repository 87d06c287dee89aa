// Brute-force reference semantics: Linf and full-language membership by
// direct cascade evaluation, bounded enumeration, plus-closure (finite
// omega-power) decomposition, and the wrong-code / decomposability prefix
// classification.

#ifndef ERASER_ORACLE_HPP
#define ERASER_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eraser/codec.hpp"
#include "eraser/eval.hpp"
#include "eraser/word.hpp"

namespace eraser {

// Membership in Linf = union of the L_n: the cascade over every index
// present is defined and the residue is in 0*1.
inline bool is_linf(const Word& w) {
    int max_index = 0;
    for (const Symbol& s : w.syms) {
        if (s.is_code()) throw std::domain_error("is_linf: code character in word");
        if (s.is_eraser()) {
            if (s.value < 1) throw std::domain_error("is_linf: eraser index 0");
            max_index = std::max(max_index, s.value);
        }
    }
    if (max_index == 0) return matches_zero_star_one(w);
    return is_ln_member(w, max_index);
}

// Reference verdict for the machine language Linf + W.
inline bool oracle_member_b(const EncodedWord& e) {
    if (has_wrong_code(e)) return true;
    return is_linf(decode(e));
}

using MemberFn = std::function<bool(const std::string&)>;

// All members of length <= max_len in length-lexicographic order.
inline std::vector<std::string> enumerate_members(const MemberFn& member,
                                                  const std::string& alphabet,
                                                  std::size_t max_len,
                                                  std::size_t budget = 50'000'000) {
    std::vector<std::string> out;
    std::size_t cost = 1;
    if (member("")) out.push_back("");
    for (std::size_t len = 1; len <= max_len && !alphabet.empty(); ++len) {
        if (cost > budget / alphabet.size())
            throw std::length_error("enumerate_members: budget exceeded");
        cost *= alphabet.size();
        std::vector<std::size_t> idx(len, 0);
        std::string cur(len, alphabet[0]);
        while (true) {
            if (member(cur)) out.push_back(cur);
            std::size_t i = len;
            while (i > 0 && ++idx[i - 1] == alphabet.size()) {
                idx[i - 1] = 0;
                cur[i - 1] = alphabet[0];
                --i;
            }
            if (i == 0) break;
            cur[i - 1] = alphabet[idx[i - 1]];
        }
    }
    return out;
}

// Split positions 0 = p0 < p1 < ... < pm = |u| with every segment a
// nonempty member, witnessing u in V+ (the finitary shadow of the
// omega-power).  Empty input yields the trivial split {0}.  Dynamic
// program over prefixes; member verdicts are memoized per substring.
inline std::optional<std::vector<std::size_t>> decompose_power(const std::string& u,
                                                               const MemberFn& member) {
    const std::size_t n = u.size();
    std::vector<int> memo(n * (n + 1), -1);  // (start, end) -> verdict
    auto seg = [&](std::size_t i, std::size_t j) {
        int& m = memo[i * (n + 1) + j];
        if (m < 0) m = member(u.substr(i, j - i)) ? 1 : 0;
        return m == 1;
    };
    std::vector<int> back(n + 1, -1);
    std::vector<bool> ok(n + 1, false);
    ok[0] = true;
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (ok[i] && seg(i, j)) {
                ok[j] = true;
                back[j] = static_cast<int>(i);
                break;
            }
    if (!ok[n]) return std::nullopt;
    std::vector<std::size_t> splits;
    for (std::size_t j = n;; j = back[j]) {
        splits.push_back(j);
        if (j == 0) break;
    }
    std::reverse(splits.begin(), splits.end());
    return splits;
}

struct PrefixClass {
    std::size_t wrong_code_count;
    bool decomposable;
};

// Finite-prefix shadow of the no-wrong-codes / infinitely-many /
// finitely-many trichotomy: the count of malformed tokens, plus
// plus-closure decomposability under the full-language oracle.
inline PrefixClass classify_prefix(const EncodedWord& e) {
    std::size_t wrong = 0;
    for (const Token& t : tokenize(e))
        if (t.kind == Token::Kind::Malformed) ++wrong;
    auto splits = decompose_power(e, [](const std::string& s) { return oracle_member_b(s); });
    return {wrong, splits.has_value()};
}

}  // namespace eraser

#endif
