// Nondeterministic pushdown automata: the 7-tuple machine, single-step
// successor expansion, a memoized configuration search that decides
// membership with an explicit run certificate, and the standard
// constructions used around it (normalization, union, DFA embedding,
// text serialization).
//
// Stack strings keep the top at the front.  A transition
// (q, a, Z) -> (p, beta) replaces the top symbol Z by the string beta;
// a is an input character or epsilon.

#ifndef ERASER_PDA_HPP
#define ERASER_PDA_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "eraser/word.hpp"

namespace eraser {

constexpr char kEpsilon = '\0';

struct Pda {
    enum class Acceptance { FinalState, EmptyStack };

    std::vector<std::string> state_names;
    std::vector<std::string> stack_names;
    std::string input_alphabet;
    int initial = -1;
    int bottom = -1;  // Z0
    std::set<int> finals;
    Acceptance acceptance = Acceptance::FinalState;

    // (state, input char or kEpsilon, top symbol) -> successors
    using Key = std::tuple<int, char, int>;
    using Target = std::pair<int, std::vector<int>>;  // (state, push string, top first)
    std::map<Key, std::vector<Target>> delta;

    int add_state(const std::string& name) {
        state_names.push_back(name);
        return static_cast<int>(state_names.size()) - 1;
    }
    int add_stack_symbol(const std::string& name) {
        stack_names.push_back(name);
        return static_cast<int>(stack_names.size()) - 1;
    }
    int state_id(const std::string& name) const {
        auto it = std::find(state_names.begin(), state_names.end(), name);
        if (it == state_names.end())
            throw std::invalid_argument("Pda: unknown state " + name);
        return static_cast<int>(it - state_names.begin());
    }
    int stack_id(const std::string& name) const {
        auto it = std::find(stack_names.begin(), stack_names.end(), name);
        if (it == stack_names.end())
            throw std::invalid_argument("Pda: unknown stack symbol " + name);
        return static_cast<int>(it - stack_names.begin());
    }

    void add_transition(int q, char a, int z, int p, std::vector<int> push) {
        check_state(q);
        check_state(p);
        check_stack(z);
        for (int y : push) check_stack(y);
        if (a != kEpsilon && input_alphabet.find(a) == std::string::npos)
            throw std::invalid_argument(std::string("Pda: input symbol '") + a +
                                        "' not in alphabet");
        delta[{q, a, z}].emplace_back(p, std::move(push));
    }

    bool is_normalized() const {
        for (const auto& [k, targets] : delta)
            for (const auto& [p, push] : targets)
                if (push.size() > 2) return false;
        return true;
    }

   private:
    void check_state(int q) const {
        if (q < 0 || q >= static_cast<int>(state_names.size()))
            throw std::invalid_argument("Pda: state id out of range");
    }
    void check_stack(int z) const {
        if (z < 0 || z >= static_cast<int>(stack_names.size()))
            throw std::invalid_argument("Pda: stack id out of range");
    }
};

struct Configuration {
    int state;
    std::size_t input_position;
    std::vector<int> stack;  // front = top

    bool operator==(const Configuration&) const = default;
};

// All configurations reachable from c by one epsilon move or one move
// consuming input[c.input_position].  An empty stack has no successors.
inline std::vector<Configuration> step(const Pda& pda, const Configuration& c,
                                       const EncodedWord& input) {
    std::vector<Configuration> out;
    if (c.stack.empty()) return out;
    int top = c.stack.front();
    auto expand = [&](char a) {
        auto it = pda.delta.find({c.state, a, top});
        if (it == pda.delta.end()) return;
        for (const auto& [p, push] : it->second) {
            Configuration succ;
            succ.state = p;
            succ.input_position = c.input_position + (a == kEpsilon ? 0 : 1);
            succ.stack.reserve(push.size() + c.stack.size() - 1);
            succ.stack.insert(succ.stack.end(), push.begin(), push.end());
            succ.stack.insert(succ.stack.end(), c.stack.begin() + 1, c.stack.end());
            out.push_back(std::move(succ));
        }
    };
    expand(kEpsilon);
    if (c.input_position < input.size()) expand(input[c.input_position]);
    return out;
}

struct SearchLimits {
    std::size_t max_stack_depth = 0;  // 0: derive from input length
    std::size_t max_visited = 2'000'000;
    std::optional<std::uint64_t> shuffle_seed;  // shuffle successor order
};

enum class Verdict { Accept, Reject, Inconclusive };

struct SearchResult {
    Verdict verdict;
    // Accepting run: configurations from the initial one to an accepting
    // one; consumed[i] is the input char (or kEpsilon) read entering
    // certificate[i].  Empty unless verdict == Accept.
    std::vector<Configuration> certificate;
    std::vector<char> consumed;
    std::size_t visited = 0;
};

inline bool is_accepting_config(const Pda& pda, const Configuration& c,
                                const EncodedWord& input) {
    if (c.input_position != input.size()) return false;
    if (pda.acceptance == Pda::Acceptance::EmptyStack) return c.stack.empty();
    return pda.finals.count(c.state) > 0;
}

inline SearchResult accepts_search(const Pda& pda, const EncodedWord& input,
                                   SearchLimits limits = {}) {
    std::size_t depth_cap =
        limits.max_stack_depth ? limits.max_stack_depth : 4 * input.size() + 32;

    struct Node {
        Configuration cfg;
        int parent;
        char consumed;
    };
    std::vector<Node> nodes;
    std::unordered_set<std::string> visited;
    auto key = [](const Configuration& c) {
        std::string k = std::to_string(c.state) + ':' + std::to_string(c.input_position) + ':';
        for (int s : c.stack) {
            k += std::to_string(s);
            k += ',';
        }
        return k;
    };

    std::optional<std::mt19937_64> rng;
    if (limits.shuffle_seed) rng.emplace(*limits.shuffle_seed);

    Configuration start{pda.initial, 0, {pda.bottom}};
    nodes.push_back({start, -1, kEpsilon});
    visited.insert(key(start));
    std::deque<std::size_t> frontier{0};
    bool truncated = false;

    auto build_result = [&](std::size_t idx) {
        SearchResult r;
        r.verdict = Verdict::Accept;
        r.visited = visited.size();
        std::vector<std::size_t> path;
        for (int i = static_cast<int>(idx); i >= 0; i = nodes[i].parent)
            path.push_back(i);
        std::reverse(path.begin(), path.end());
        for (std::size_t i : path) {
            r.certificate.push_back(nodes[i].cfg);
            r.consumed.push_back(nodes[i].consumed);
        }
        return r;
    };

    while (!frontier.empty()) {
        std::size_t idx = frontier.front();
        frontier.pop_front();
        Configuration cfg = nodes[idx].cfg;  // copy: nodes may reallocate
        if (is_accepting_config(pda, cfg, input)) return build_result(idx);

        std::vector<Configuration> succs = step(pda, cfg, input);
        if (rng) std::shuffle(succs.begin(), succs.end(), *rng);
        for (auto& s : succs) {
            if (s.stack.size() > depth_cap) {
                truncated = true;
                continue;
            }
            if (visited.size() >= limits.max_visited) {
                truncated = true;
                break;
            }
            char consumed =
                s.input_position == cfg.input_position ? kEpsilon : input[cfg.input_position];
            if (!visited.insert(key(s)).second) continue;
            nodes.push_back({std::move(s), static_cast<int>(idx), consumed});
            frontier.push_back(nodes.size() - 1);
        }
    }

    SearchResult r;
    r.verdict = truncated ? Verdict::Inconclusive : Verdict::Reject;
    r.visited = visited.size();
    return r;
}

// Replays a certificate against step(); true iff every configuration follows
// from its predecessor, the run starts in the initial configuration, consumes
// the whole input in order, and ends accepting.
inline bool replay_certificate(const Pda& pda, const EncodedWord& input,
                               const SearchResult& r) {
    if (r.verdict != Verdict::Accept || r.certificate.empty()) return false;
    const Configuration init{pda.initial, 0, {pda.bottom}};
    if (!(r.certificate.front() == init)) return false;
    for (std::size_t i = 1; i < r.certificate.size(); ++i) {
        auto succs = step(pda, r.certificate[i - 1], input);
        if (std::find(succs.begin(), succs.end(), r.certificate[i]) == succs.end())
            return false;
        char c = r.consumed[i];
        std::size_t prev = r.certificate[i - 1].input_position;
        std::size_t cur = r.certificate[i].input_position;
        if (c == kEpsilon ? cur != prev : (cur != prev + 1 || input[prev] != c))
            return false;
    }
    return is_accepting_config(pda, r.certificate.back(), input);
}

// Splits every push of length > 2 through fresh intermediate states.
inline Pda normalize(const Pda& pda) {
    Pda out = pda;
    out.delta.clear();
    int fresh = 0;
    for (const auto& [k, targets] : pda.delta) {
        auto [q, a, z] = k;
        for (const auto& [p, push] : targets) {
            if (push.size() <= 2) {
                out.delta[{q, a, z}].emplace_back(p, push);
                continue;
            }
            // Emit the push bottom-up: first replace z by the last symbol,
            // then grow the prefix one symbol at a time.
            int cur = out.add_state("norm" + std::to_string(fresh++));
            out.delta[{q, a, z}].emplace_back(cur, std::vector<int>{push.back()});
            for (std::size_t i = push.size() - 1; i >= 2; --i) {
                int next = out.add_state("norm" + std::to_string(fresh++));
                out.delta[{cur, kEpsilon, push[i]}].emplace_back(
                    next, std::vector<int>{push[i - 1], push[i]});
                cur = next;
            }
            out.delta[{cur, kEpsilon, push[1]}].emplace_back(
                p, std::vector<int>{push[0], push[1]});
        }
    }
    return out;
}

// L(union) = L(p1) + L(p2): fresh initial state with epsilon branches into
// disjoint copies.  Both machines must accept by final state and share an
// input alphabet.
inline Pda union_pda(const Pda& p1, const Pda& p2) {
    auto sorted = [](std::string s) {
        std::sort(s.begin(), s.end());
        return s;
    };
    if (sorted(p1.input_alphabet) != sorted(p2.input_alphabet))
        throw std::domain_error("union_pda: input alphabet mismatch");
    if (p1.acceptance != Pda::Acceptance::FinalState ||
        p2.acceptance != Pda::Acceptance::FinalState)
        throw std::domain_error("union_pda: final-state acceptance required");

    Pda out;
    out.input_alphabet = p1.input_alphabet;
    out.initial = out.add_state("u0");
    out.bottom = out.add_stack_symbol("U0");

    auto embed = [&](const Pda& p, const std::string& prefix) {
        int state_off = static_cast<int>(out.state_names.size());
        int stack_off = static_cast<int>(out.stack_names.size());
        for (const auto& n : p.state_names) out.add_state(prefix + n);
        for (const auto& n : p.stack_names) out.add_stack_symbol(prefix + n);
        for (const auto& [k, targets] : p.delta) {
            auto [q, a, z] = k;
            for (const auto& [r, push] : targets) {
                std::vector<int> sh;
                for (int y : push) sh.push_back(y + stack_off);
                out.delta[{q + state_off, a, z + stack_off}].emplace_back(r + state_off,
                                                                         std::move(sh));
            }
        }
        for (int f : p.finals) out.finals.insert(f + state_off);
        out.delta[{out.initial, kEpsilon, out.bottom}].emplace_back(
            p.initial + state_off, std::vector<int>{p.bottom + stack_off});
    };
    embed(p1, "l.");
    embed(p2, "r.");
    return out;
}

// --- DFA embedding ----------------------------------------------------------

struct Dfa {
    std::vector<std::string> state_names;
    std::string alphabet;
    int initial = 0;
    std::set<int> finals;
    std::map<std::pair<int, char>, int> trans;

    int add_state(const std::string& name) {
        state_names.push_back(name);
        return static_cast<int>(state_names.size()) - 1;
    }
};

inline bool dfa_accepts(const Dfa& d, const std::string& input) {
    int q = d.initial;
    for (char c : input) {
        auto it = d.trans.find({q, c});
        if (it == d.trans.end()) return false;
        q = it->second;
    }
    return d.finals.count(q) > 0;
}

// PDA with the same language that never touches the stack.
inline Pda from_dfa(const Dfa& d) {
    Pda out;
    out.input_alphabet = d.alphabet;
    for (const auto& n : d.state_names) out.add_state(n);
    out.bottom = out.add_stack_symbol("Z0");
    out.initial = d.initial;
    out.finals = d.finals;
    for (const auto& [k, p] : d.trans)
        out.delta[{k.first, k.second, out.bottom}].emplace_back(
            p, std::vector<int>{out.bottom});
    return out;
}

// --- text serialization -----------------------------------------------------
//
// Line-oriented, bit-exact under round-trip.  Transitions are written in key
// order with successor lists sorted.

inline std::string serialize(const Pda& pda) {
    std::ostringstream out;
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i];
        return s;
    };
    out << "pda\n";
    out << "states: " << join(pda.state_names) << "\n";
    out << "input: " << pda.input_alphabet << "\n";
    out << "stack: " << join(pda.stack_names) << "\n";
    out << "initial: " << pda.state_names.at(pda.initial) << "\n";
    out << "bottom: " << pda.stack_names.at(pda.bottom) << "\n";
    std::vector<std::string> fs;
    for (int f : pda.finals) fs.push_back(pda.state_names.at(f));
    out << "finals: " << join(fs) << "\n";
    out << "acceptance: "
        << (pda.acceptance == Pda::Acceptance::FinalState ? "final" : "empty") << "\n";
    out << "transitions:\n";
    for (const auto& [k, targets] : pda.delta) {
        auto [q, a, z] = k;
        auto sorted_targets = targets;
        std::sort(sorted_targets.begin(), sorted_targets.end());
        for (const auto& [p, push] : sorted_targets) {
            std::vector<std::string> pn;
            for (int y : push) pn.push_back(pda.stack_names.at(y));
            out << pda.state_names.at(q) << " , "
                << (a == kEpsilon ? std::string("eps") : std::string(1, a)) << " , "
                << pda.stack_names.at(z) << " -> " << pda.state_names.at(p) << " , "
                << join(pn) << "\n";
        }
    }
    out << "end\n";
    return out.str();
}

inline Pda deserialize(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next = [&]() {
        if (!std::getline(in, line))
            throw std::invalid_argument("deserialize: unexpected end of input");
        return line;
    };
    auto field = [&](const std::string& tag) {
        next();
        if (line.rfind(tag, 0) != 0)
            throw std::invalid_argument("deserialize: expected \"" + tag + "\"");
        std::string rest = line.substr(tag.size());
        if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
        return rest;
    };
    auto split = [](const std::string& s) {
        std::vector<std::string> v;
        std::istringstream ss(s);
        std::string t;
        while (ss >> t) v.push_back(t);
        return v;
    };

    if (next() != "pda") throw std::invalid_argument("deserialize: missing header");
    Pda pda;
    pda.state_names = split(field("states:"));
    pda.input_alphabet = field("input:");
    pda.stack_names = split(field("stack:"));
    pda.initial = pda.state_id(field("initial:"));
    pda.bottom = pda.stack_id(field("bottom:"));
    for (const auto& f : split(field("finals:"))) pda.finals.insert(pda.state_id(f));
    std::string acc = field("acceptance:");
    pda.acceptance =
        acc == "empty" ? Pda::Acceptance::EmptyStack : Pda::Acceptance::FinalState;
    if (field("transitions:") != "")
        throw std::invalid_argument("deserialize: malformed transitions header");
    auto split_commas = [](const std::string& s) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (true) {
            auto p = s.find(" , ", start);
            if (p == std::string::npos) {
                parts.push_back(s.substr(start));
                break;
            }
            parts.push_back(s.substr(start, p - start));
            start = p + 3;
        }
        return parts;
    };
    while (next() != "end") {
        auto arrow = line.find(" -> ");
        if (arrow == std::string::npos)
            throw std::invalid_argument("deserialize: malformed transition: " + line);
        auto lhs = split_commas(line.substr(0, arrow));
        auto rhs = split_commas(line.substr(arrow + 4));
        if (lhs.size() != 3 || rhs.size() != 2)
            throw std::invalid_argument("deserialize: malformed transition: " + line);
        char a = lhs[1] == "eps" ? kEpsilon : lhs[1].at(0);
        std::vector<int> push;
        for (const auto& y : split(rhs[1])) push.push_back(pda.stack_id(y));
        pda.add_transition(pda.state_id(lhs[0]), a, pda.stack_id(lhs[2]),
                           pda.state_id(rhs[0]), std::move(push));
    }
    return pda;
}

}  // namespace eraser

#endif
