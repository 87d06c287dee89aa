// Context-free grammar side of the engine: empty-stack conversion, the
// [q Z p] triple construction from a normalized PDA, grammar reduction,
// Chomsky normal form, and CYK membership.  Together these provide the
// decision route independent of the configuration search.

#ifndef ERASER_CFG_HPP
#define ERASER_CFG_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "eraser/pda.hpp"

namespace eraser {

struct Cfg {
    // Rhs entries: nonterminal ids >= 0; terminal c encoded as -1 - c.
    static int term(char c) { return -1 - static_cast<int>(static_cast<unsigned char>(c)); }
    static bool is_term(int s) { return s < 0; }
    static char term_char(int s) { return static_cast<char>(-1 - s); }

    struct Prod {
        int lhs;
        std::vector<int> rhs;
        bool operator<(const Prod& o) const {
            return std::tie(lhs, rhs) < std::tie(o.lhs, o.rhs);
        }
        bool operator==(const Prod&) const = default;
    };

    std::vector<std::string> nt_names;
    std::string terminals;
    std::vector<Prod> prods;
    int start = 0;
    bool cnf = false;

    int add_nt(const std::string& name) {
        nt_names.push_back(name);
        return static_cast<int>(nt_names.size()) - 1;
    }
};

// Converts final-state acceptance to empty-stack acceptance: a fresh bottom
// marker below the original stack, and a drain state reachable from every
// final state that pops everything.
inline Pda to_final_state_free(const Pda& pda) {
    if (pda.acceptance != Pda::Acceptance::FinalState)
        throw std::domain_error("to_final_state_free: expects final-state acceptance");
    Pda out = pda;
    int qs = out.add_state("es.init");
    int drain = out.add_state("es.drain");
    int x0 = out.add_stack_symbol("X0");
    out.delta[{qs, kEpsilon, x0}].emplace_back(pda.initial,
                                               std::vector<int>{pda.bottom, x0});
    for (int z = 0; z < static_cast<int>(out.stack_names.size()); ++z) {
        for (int f : pda.finals)
            out.delta[{f, kEpsilon, z}].emplace_back(drain, std::vector<int>{});
        out.delta[{drain, kEpsilon, z}].emplace_back(drain, std::vector<int>{});
    }
    out.initial = qs;
    out.bottom = x0;
    out.finals.clear();
    out.acceptance = Pda::Acceptance::EmptyStack;
    return out;
}

// Drops nonterminals that are unproductive or unreachable from the start.
inline Cfg reduce(const Cfg& g) {
    std::size_t n = g.nt_names.size();
    std::vector<bool> productive(n, false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.prods) {
            if (productive[p.lhs]) continue;
            bool ok = true;
            for (int s : p.rhs)
                if (!Cfg::is_term(s) && !productive[s]) ok = false;
            if (ok) productive[p.lhs] = changed = true;
        }
    }
    std::vector<bool> reachable(n, false);
    if (productive[g.start]) {
        std::vector<int> todo{g.start};
        reachable[g.start] = true;
        while (!todo.empty()) {
            int a = todo.back();
            todo.pop_back();
            for (const auto& p : g.prods) {
                if (p.lhs != a || !productive[a]) continue;
                bool ok = true;
                for (int s : p.rhs)
                    if (!Cfg::is_term(s) && !productive[s]) ok = false;
                if (!ok) continue;
                for (int s : p.rhs)
                    if (!Cfg::is_term(s) && !reachable[s]) {
                        reachable[s] = true;
                        todo.push_back(s);
                    }
            }
        }
    }
    Cfg out;
    out.terminals = g.terminals;
    std::vector<int> remap(n, -1);
    for (std::size_t i = 0; i < n; ++i)
        if (productive[i] && reachable[i]) remap[i] = out.add_nt(g.nt_names[i]);
    if (remap[g.start] == -1) {
        // Empty language: keep a bare start symbol with no productions.
        out.start = out.add_nt(g.nt_names[g.start]);
        return out;
    }
    out.start = remap[g.start];
    std::set<Cfg::Prod> seen;
    for (const auto& p : g.prods) {
        if (remap[p.lhs] == -1) continue;
        Cfg::Prod q{remap[p.lhs], {}};
        bool ok = true;
        for (int s : p.rhs) {
            if (Cfg::is_term(s)) {
                q.rhs.push_back(s);
            } else if (remap[s] == -1) {
                ok = false;
                break;
            } else {
                q.rhs.push_back(remap[s]);
            }
        }
        if (ok && seen.insert(q).second) out.prods.push_back(std::move(q));
    }
    return out;
}

// Triple construction: nonterminal [q Z p] derives exactly the inputs that
// take the machine from state q with lone Z on this stack slice to state p
// having popped it.  Requires pushes of length <= 2; a final-state machine
// is converted to empty-stack acceptance first.
inline Cfg to_cfg(const Pda& input_pda) {
    if (!input_pda.is_normalized())
        throw std::domain_error("to_cfg: PDA must be normalized (push length <= 2)");
    const Pda pda = input_pda.acceptance == Pda::Acceptance::FinalState
                        ? to_final_state_free(input_pda)
                        : input_pda;

    int nq = static_cast<int>(pda.state_names.size());
    int nz = static_cast<int>(pda.stack_names.size());
    Cfg g;
    g.terminals = pda.input_alphabet;
    g.start = g.add_nt("S");
    auto triple = [&](int q, int z, int p) { return 1 + (q * nz + z) * nq + p; };
    for (int q = 0; q < nq; ++q)
        for (int z = 0; z < nz; ++z)
            for (int p = 0; p < nq; ++p)
                g.add_nt("[" + pda.state_names[q] + " " + pda.stack_names[z] + " " +
                         pda.state_names[p] + "]");

    for (int p = 0; p < nq; ++p)
        g.prods.push_back({g.start, {triple(pda.initial, pda.bottom, p)}});

    for (const auto& [k, targets] : pda.delta) {
        auto [q, a, z] = k;
        std::vector<int> pre;
        if (a != kEpsilon) pre.push_back(Cfg::term(a));
        for (const auto& [r, push] : targets) {
            if (push.empty()) {
                g.prods.push_back({triple(q, z, r), pre});
            } else if (push.size() == 1) {
                for (int p = 0; p < nq; ++p) {
                    auto rhs = pre;
                    rhs.push_back(triple(r, push[0], p));
                    g.prods.push_back({triple(q, z, p), std::move(rhs)});
                }
            } else {
                for (int p1 = 0; p1 < nq; ++p1)
                    for (int p = 0; p < nq; ++p) {
                        auto rhs = pre;
                        rhs.push_back(triple(r, push[0], p1));
                        rhs.push_back(triple(p1, push[1], p));
                        g.prods.push_back({triple(q, z, p), std::move(rhs)});
                    }
            }
        }
    }
    return reduce(g);
}

// Chomsky normal form: every production is N -> N1 N2 or N -> t, with an
// optional start -> epsilon.  Preserves the language.
inline Cfg cnf(const Cfg& input) {
    Cfg g = input;
    g.cnf = false;

    // fresh start, never on a rhs
    int s0 = g.add_nt("S0");
    g.prods.push_back({s0, {g.start}});
    g.start = s0;

    // TERM: terminals only in unit terminal productions
    std::map<char, int> term_nt;
    for (auto& p : g.prods) {
        if (p.rhs.size() <= 1) continue;
        for (int& s : p.rhs) {
            if (!Cfg::is_term(s)) continue;
            char c = Cfg::term_char(s);
            auto it = term_nt.find(c);
            int t;
            if (it == term_nt.end()) {
                t = g.add_nt(std::string("T_") + c);
                term_nt[c] = t;
            } else {
                t = it->second;
            }
            s = t;
        }
    }
    for (auto [c, t] : term_nt) g.prods.push_back({t, {Cfg::term(c)}});

    // BIN: split long right-hand sides
    std::vector<Cfg::Prod> binned;
    int bin_count = 0;
    for (auto& p : g.prods) {
        if (p.rhs.size() <= 2) {
            binned.push_back(p);
            continue;
        }
        int lhs = p.lhs;
        for (std::size_t i = 0; i + 2 < p.rhs.size(); ++i) {
            int fresh = g.add_nt("B" + std::to_string(bin_count++));
            binned.push_back({lhs, {p.rhs[i], fresh}});
            lhs = fresh;
        }
        binned.push_back({lhs, {p.rhs[p.rhs.size() - 2], p.rhs.back()}});
    }
    g.prods = std::move(binned);

    // DEL: eliminate epsilon productions (start excepted)
    std::set<int> nullable;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.prods) {
            if (nullable.count(p.lhs)) continue;
            bool all_null = true;
            for (int s : p.rhs)
                if (Cfg::is_term(s) || !nullable.count(s)) {
                    all_null = false;
                    break;
                }
            if (all_null) {
                nullable.insert(p.lhs);
                changed = true;
            }
        }
    }
    std::set<Cfg::Prod> after_del;
    for (const auto& p : g.prods) {
        // expand every subset of nullable occurrences (rhs length <= 2 here)
        std::vector<std::vector<int>> variants{{}};
        for (int s : p.rhs) {
            std::vector<std::vector<int>> next;
            for (const auto& v : variants) {
                auto with = v;
                with.push_back(s);
                next.push_back(with);
                if (!Cfg::is_term(s) && nullable.count(s)) next.push_back(v);
            }
            variants = std::move(next);
        }
        for (auto& v : variants) {
            if (v.empty() && p.lhs != g.start) continue;
            after_del.insert({p.lhs, std::move(v)});
        }
    }
    if (nullable.count(g.start)) after_del.insert({g.start, {}});
    g.prods.assign(after_del.begin(), after_del.end());

    // UNIT: close unit chains
    std::set<Cfg::Prod> final_prods;
    std::size_t n = g.nt_names.size();
    std::vector<std::set<int>> unit_reach(n);
    for (std::size_t i = 0; i < n; ++i) unit_reach[i].insert(static_cast<int>(i));
    changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.prods) {
            if (p.rhs.size() != 1 || Cfg::is_term(p.rhs[0])) continue;
            for (std::size_t a = 0; a < n; ++a)
                if (unit_reach[a].count(p.lhs) && !unit_reach[a].count(p.rhs[0])) {
                    unit_reach[a].insert(p.rhs[0]);
                    changed = true;
                }
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (int b : unit_reach[a]) {
            for (const auto& p : g.prods) {
                if (p.lhs != b) continue;
                bool is_unit_nt = p.rhs.size() == 1 && !Cfg::is_term(p.rhs[0]);
                if (is_unit_nt) continue;
                if (p.rhs.empty() && static_cast<int>(a) != g.start) continue;
                final_prods.insert({static_cast<int>(a), p.rhs});
            }
        }
    }
    g.prods.assign(final_prods.begin(), final_prods.end());

    Cfg out = reduce(g);
    out.cnf = true;
    return out;
}

inline bool cyk_member(const Cfg& g, const std::string& input) {
    if (!g.cnf) throw std::domain_error("cyk_member: grammar must be in CNF");
    const std::size_t n = input.size();
    if (n == 0) {
        for (const auto& p : g.prods)
            if (p.lhs == g.start && p.rhs.empty()) return true;
        return false;
    }
    const std::size_t nn = g.nt_names.size();
    // binary productions indexed by first rhs nonterminal
    std::vector<std::vector<std::pair<int, int>>> by_first(nn);  // (second, lhs)
    for (const auto& p : g.prods)
        if (p.rhs.size() == 2) by_first[p.rhs[0]].push_back({p.rhs[1], p.lhs});

    auto cell = [&](std::size_t i, std::size_t len) -> std::size_t {
        return (len - 1) * n + i;
    };
    std::vector<std::vector<bool>> table(n * n, std::vector<bool>(nn, false));
    std::vector<std::vector<int>> members(n * n);

    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& p : g.prods)
            if (p.rhs.size() == 1 && Cfg::is_term(p.rhs[0]) &&
                Cfg::term_char(p.rhs[0]) == input[i] && !table[cell(i, 1)][p.lhs]) {
                table[cell(i, 1)][p.lhs] = true;
                members[cell(i, 1)].push_back(p.lhs);
            }
    }
    for (std::size_t len = 2; len <= n; ++len) {
        for (std::size_t i = 0; i + len <= n; ++i) {
            auto& out_tab = table[cell(i, len)];
            auto& out_mem = members[cell(i, len)];
            for (std::size_t l = 1; l < len; ++l) {
                const auto& left = members[cell(i, l)];
                const auto& right = table[cell(i + l, len - l)];
                for (int b : left)
                    for (auto [c, a] : by_first[b])
                        if (right[c] && !out_tab[a]) {
                            out_tab[a] = true;
                            out_mem.push_back(a);
                        }
            }
        }
    }
    return table[cell(0, n)][g.start];
}

}  // namespace eraser

#endif
