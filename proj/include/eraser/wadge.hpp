// Finite-horizon Wadge-game machinery: plays, deterministic strategies for
// player II, the index-shift strategy, the copy-with-renaming strategy, and
// the cascade-correspondence check that stands in for the winning condition
// at finite horizon.
//
// Player I's alphabet may include the strongest eraser, modeled as !0;
// eraser strength is opposite to the index, so the priority cascade
// evaluates !0 first, then !1, !2, ... up to the largest index present.
// The shift strategy realizes the order isomorphism that maps I's eraser
// order (!0 < !1 < !2 < ...) onto II's (!1 < !2 < ...).

#ifndef ERASER_WADGE_HPP
#define ERASER_WADGE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eraser/eval.hpp"
#include "eraser/word.hpp"

namespace eraser {

struct Move {
    bool skip;
    Symbol symbol;  // valid iff !skip

    static Move play(Symbol s) { return {false, s}; }
    static Move make_skip() { return {true, Symbol::letter(0)}; }

    bool operator==(const Move&) const = default;
};

struct Play {
    std::vector<std::pair<Move, Move>> rounds;  // (I's move, II's move)

    // Player I never skips, so x_I has one symbol per round.
    Word x_i() const {
        Word w;
        for (const auto& [mi, mii] : rounds) w.push_back(mi.symbol);
        return w;
    }
    Word x_ii() const {
        Word w;
        for (const auto& [mi, mii] : rounds)
            if (!mii.skip) w.push_back(mii.symbol);
        return w;
    }
};

// Deterministic mapping from I's move history to II's next move.
using Strategy = std::function<Move(const Word& history)>;

inline Play run_play(const std::vector<Symbol>& source_i, const Strategy& strat_ii,
                     std::size_t rounds) {
    if (source_i.size() < rounds)
        throw std::invalid_argument("run_play: source exhausted before horizon");
    Play play;
    Word history;
    for (std::size_t r = 0; r < rounds; ++r) {
        history.push_back(source_i[r]);
        play.rounds.emplace_back(Move::play(source_i[r]), strat_ii(history));
    }
    return play;
}

// Letters copied; !n becomes !(n+1); the strongest eraser !0 becomes !1.
inline Strategy shift_strategy() {
    return [](const Word& history) {
        const Symbol& s = history.at(history.size());
        if (s.is_letter()) return Move::play(s);
        if (s.is_eraser()) return Move::play(Symbol::eraser(s.value + 1));
        throw std::invalid_argument("shift_strategy: code character played");
    };
}

// Letters copied; eraser indices renamed through a strictly increasing map.
inline Strategy copy_rename_strategy(const std::map<int, int>& rename) {
    int prev_key = -1, prev_val = -1;
    for (const auto& [k, v] : rename) {
        if (k > prev_key && v <= prev_val)
            throw std::domain_error("copy_rename_strategy: rename not strictly increasing");
        prev_key = k;
        prev_val = v;
    }
    return [rename](const Word& history) {
        const Symbol& s = history.at(history.size());
        if (s.is_letter()) return Move::play(s);
        if (s.is_eraser()) {
            auto it = rename.find(s.value);
            return Move::play(Symbol::eraser(it == rename.end() ? s.value : it->second));
        }
        throw std::invalid_argument("copy_rename_strategy: code character played");
    };
}

// Cascade in strength order: strongest eraser first (index 0 when present),
// then increasing indices.  Stages for absent indices are identity passes
// and are skipped in the trace.
inline CascadeTrace priority_cascade(const Word& w) {
    std::vector<int> indices;
    for (const Symbol& s : w.syms)
        if (s.is_eraser()) indices.push_back(s.value);
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    CascadeTrace tr;
    Word cur = w;
    for (int k : indices) {
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

namespace detail {
// Equality up to a strictly increasing relabeling of surviving erasers:
// letters must match exactly, erasers must appear in the same places with
// order-isomorphic indices.
inline bool equal_up_to_relabel(const Word& a, const Word& b) {
    if (a.size() != b.size()) return false;
    std::map<int, int> seen;  // a-index -> b-index, must stay increasing
    for (std::size_t i = 1; i <= a.size(); ++i) {
        const Symbol& x = a.at(i);
        const Symbol& y = b.at(i);
        if (x.is_letter() || y.is_letter()) {
            if (!(x == y)) return false;
            continue;
        }
        if (!x.is_eraser() || !y.is_eraser()) return false;
        auto it = seen.find(x.value);
        if (it != seen.end()) {
            if (it->second != y.value) return false;
        } else {
            seen[x.value] = y.value;
        }
    }
    int prev = -1;
    for (const auto& [k, v] : seen) {
        if (v <= prev) return false;
        prev = v;
    }
    return true;
}
}  // namespace detail

// The finite-horizon correspondence behind the shift strategy: I's priority
// cascade and II's agree stage by stage (same definedness, order-isomorphic
// stage results), so either both runs stabilize to relabel-equal residues or
// both go undefined at corresponding stages.
inline bool check_shift_invariant(const Play& play) {
    Word xi = play.x_i();
    Word xii = play.x_ii();
    CascadeTrace ti = priority_cascade(xi);
    CascadeTrace tii = priority_cascade(xii);
    if (ti.stages.size() != tii.stages.size()) return false;
    for (std::size_t k = 0; k < ti.stages.size(); ++k) {
        const auto& [ei, oi] = ti.stages[k];
        const auto& [eii, oii] = tii.stages[k];
        if (eii != ei + 1) return false;  // shifted stage indices
        if (oi.is_defined != oii.is_defined) return false;
        if (!oi.is_defined && oi.position != oii.position) return false;
        if (oi.is_defined && !detail::equal_up_to_relabel(oi.result, oii.result))
            return false;
    }
    if (ti.final.is_defined != tii.final.is_defined) return false;
    return !ti.final.is_defined ||
           detail::equal_up_to_relabel(ti.final.result, tii.final.result);
}

// Same check restricted to the first `horizon` rounds.
inline bool check_shift_invariant(const Play& play, std::size_t horizon) {
    Play truncated;
    for (std::size_t r = 0; r < play.rounds.size() && r < horizon; ++r)
        truncated.rounds.push_back(play.rounds[r]);
    return check_shift_invariant(truncated);
}

}  // namespace eraser

#endif
