// The specific machine over the surface alphabet {0,1,A,B,C,D,E,Z} whose
// language is Linf + W: a union of
//
//   - the main machine, which simulates the 0*1 automaton while the stack
//     holds only Z0, guesses for each letter and for each eraser code
//     whether it will be erased later (pushing it), or - for a code -
//     whether it really acts as an eraser (popping the pending item after
//     the index comparisons), and maintains guard blocks L2 S^k L1 that
//     record the largest eraser index used since the item below the guard
//     was pushed;
//
//   - the wrong-code detector, which accepts exactly the words hosting a
//     malformed code under the codec's tokenizer.
//
// Stack blocks: a pending eraser !j occupies G E^j N (top first); a guard
// occupies L2 S^k L1.  Guards never sit directly on Z0.
//
// Index comparisons ride on the four copies of the block count inside a
// code A B^j C^j D^j E^j Z:
//   B-block  - guard check j >= k (pop one S per B),
//   C-block  - pending-eraser check i > j (pop one E per C, at least one
//              E must remain before the epsilon drain),
//   D-block  - guard creation S^j / guard update pop phase,
//   E-block  - guard update push-back phase (one S per E, L2 on Z).

#ifndef ERASER_MACHINE_HPP
#define ERASER_MACHINE_HPP

#include <string>
#include <vector>

#include "eraser/pda.hpp"

namespace eraser {

inline const std::string kSurfaceAlphabet = "01ABCDEZ";

// DFA for 0*1 over {0,1}.
inline Dfa zero_star_one_dfa() {
    Dfa d;
    int s0 = d.add_state("s0");
    int s1 = d.add_state("s1");
    int dead = d.add_state("dead");
    d.alphabet = "01";
    d.initial = s0;
    d.finals = {s1};
    d.trans[{s0, '0'}] = s0;
    d.trans[{s0, '1'}] = s1;
    d.trans[{s1, '0'}] = dead;
    d.trans[{s1, '1'}] = dead;
    d.trans[{dead, '0'}] = dead;
    d.trans[{dead, '1'}] = dead;
    return d;
}

inline Pda build_main() {
    Pda m;
    m.input_alphabet = kSurfaceAlphabet;

    int Z0 = m.add_stack_symbol("Z0");
    int c0 = m.add_stack_symbol("c0");
    int c1 = m.add_stack_symbol("c1");
    int G = m.add_stack_symbol("G");
    int E = m.add_stack_symbol("E");
    int N = m.add_stack_symbol("N");
    int L2 = m.add_stack_symbol("L2");
    int S = m.add_stack_symbol("S");
    int L1 = m.add_stack_symbol("L1");

    const std::vector<int> pending = {c0, c1, G};  // possible PEND tops besides L2
    const int cletter[2] = {c0, c1};

    // One copy of the control skeleton per remembered automaton state.
    // q = 0: simulation in start state (only 0s seen among surviving
    // letters); q = 1: a surviving 1 has been read (accepting).
    struct States {
        int sim, pend, pushB, pushC, pushD, pushE;
        int chkS, preC, popE, drainE, cSlack, atD;
        int dFree, eFree, gPush, gE, gUpd, gE2;
    };
    States st[2];
    for (int q = 0; q < 2; ++q) {
        std::string t = std::to_string(q);
        st[q].sim = m.add_state("sim" + t);
        st[q].pend = m.add_state("pend" + t);
        st[q].pushB = m.add_state("pushB" + t);
        st[q].pushC = m.add_state("pushC" + t);
        st[q].pushD = m.add_state("pushD" + t);
        st[q].pushE = m.add_state("pushE" + t);
        st[q].chkS = m.add_state("chkS" + t);
        st[q].preC = m.add_state("preC" + t);
        st[q].popE = m.add_state("popE" + t);
        st[q].drainE = m.add_state("drainE" + t);
        st[q].cSlack = m.add_state("cSlack" + t);
        st[q].atD = m.add_state("atD" + t);
        st[q].dFree = m.add_state("dFree" + t);
        st[q].eFree = m.add_state("eFree" + t);
        st[q].gPush = m.add_state("gPush" + t);
        st[q].gE = m.add_state("gE" + t);
        st[q].gUpd = m.add_state("gUpd" + t);
        st[q].gE2 = m.add_state("gE2" + t);
    }
    m.initial = st[0].sim;
    m.bottom = Z0;
    m.finals = {st[1].sim};

    for (int q = 0; q < 2; ++q) {
        const States& s = st[q];

        // Simulation: stack is exactly Z0.
        if (q == 0) {
            m.add_transition(s.sim, '0', Z0, st[0].sim, {Z0});
            m.add_transition(s.sim, '1', Z0, st[1].sim, {Z0});
        }
        // Guess: this letter / this code will be erased later.
        for (int bit = 0; bit < 2; ++bit)
            m.add_transition(s.sim, static_cast<char>('0' + bit), Z0, s.pend,
                             {cletter[bit], Z0});
        m.add_transition(s.sim, 'A', Z0, s.pushB, {N, Z0});

        // Pending mode: the automaton state is frozen; every letter read is
        // pushed or belongs to a code.
        std::vector<int> pend_tops = pending;
        pend_tops.push_back(L2);
        for (int top : pend_tops) {
            for (int bit = 0; bit < 2; ++bit)
                m.add_transition(s.pend, static_cast<char>('0' + bit), top, s.pend,
                                 {cletter[bit], top});
            m.add_transition(s.pend, 'A', top, s.pushB, {N, top});
        }
        // Guess: this code really erases.
        m.add_transition(s.pend, 'A', L2, s.chkS, {});  // guard check first
        for (int top : pending) m.add_transition(s.pend, 'A', top, s.preC, {top});

        // Push path for a code guessed to be erased: block G E^j N.
        m.add_transition(s.pushB, 'B', N, s.pushB, {E, N});
        m.add_transition(s.pushB, 'B', E, s.pushB, {E, E});
        m.add_transition(s.pushB, 'C', E, s.pushC, {E});
        m.add_transition(s.pushC, 'C', E, s.pushC, {E});
        m.add_transition(s.pushC, 'D', E, s.pushD, {E});
        m.add_transition(s.pushD, 'D', E, s.pushD, {E});
        m.add_transition(s.pushD, 'E', E, s.pushE, {E});
        m.add_transition(s.pushE, 'E', E, s.pushE, {E});
        m.add_transition(s.pushE, 'Z', E, s.pend, {G, E});

        // Guard check j >= k: pop one S per B; the C block may begin only
        // once every S is gone.
        m.add_transition(s.chkS, 'B', S, s.chkS, {});
        m.add_transition(s.chkS, 'B', L1, s.chkS, {L1});
        m.add_transition(s.chkS, kEpsilon, L1, s.preC, {});

        // Above the pending item, before the C block.
        for (int top : pending) m.add_transition(s.preC, 'B', top, s.preC, {top});
        for (int bit = 0; bit < 2; ++bit)
            m.add_transition(s.preC, 'C', cletter[bit], s.cSlack, {});
        m.add_transition(s.preC, kEpsilon, G, s.popE, {});

        // Pending-eraser check i > j: pop one E per C; the drain consumes
        // one more E, so it exists only when i exceeds the C count.
        m.add_transition(s.popE, 'C', E, s.popE, {});
        m.add_transition(s.popE, kEpsilon, E, s.drainE, {});
        m.add_transition(s.drainE, kEpsilon, E, s.drainE, {});
        m.add_transition(s.drainE, kEpsilon, N, s.atD, {});

        // Item popped; dispatch on the new top at the D block.
        std::vector<int> any_top = {Z0, c0, c1, G, L2};
        for (int top : any_top) m.add_transition(s.cSlack, 'C', top, s.cSlack, {top});
        for (int from : {s.cSlack, s.atD}) {
            m.add_transition(from, 'D', Z0, s.dFree, {Z0});
            for (int top : pending)
                m.add_transition(from, 'D', top, s.gPush, {S, L1, top});
            m.add_transition(from, kEpsilon, L2, s.gUpd, {});
        }

        // Case 1: back on Z0; finish the code and resume simulation.
        m.add_transition(s.dFree, 'D', Z0, s.dFree, {Z0});
        m.add_transition(s.dFree, 'E', Z0, s.eFree, {Z0});
        m.add_transition(s.eFree, 'E', Z0, s.eFree, {Z0});
        m.add_transition(s.eFree, 'Z', Z0, s.sim, {Z0});

        // Case 2: pending item uncovered; build guard L2 S^j L1 from the
        // D block.
        m.add_transition(s.gPush, 'D', S, s.gPush, {S, S});
        m.add_transition(s.gPush, 'E', S, s.gE, {L2, S});
        m.add_transition(s.gE, 'E', L2, s.gE, {L2});
        m.add_transition(s.gE, 'Z', L2, s.pend, {L2});

        // Case 3: guard uncovered; replace S^l by S^max(j,l): pop one S per
        // D, push one S per E, restore L2 on Z.
        m.add_transition(s.gUpd, 'D', S, s.gUpd, {});
        m.add_transition(s.gUpd, 'D', L1, s.gUpd, {L1});
        m.add_transition(s.gUpd, 'E', S, s.gE2, {S, S});
        m.add_transition(s.gUpd, 'E', L1, s.gE2, {S, L1});
        m.add_transition(s.gE2, 'E', S, s.gE2, {S, S});
        m.add_transition(s.gE2, 'Z', S, s.pend, {L2, S});
    }
    return m;
}

// Accepts exactly the words hosting a wrong code: either the word breaks the
// regular shape (0|1|A B+ C+ D+ E+ Z)*, or some well-shaped segment has two
// adjacent blocks of different lengths.  Each route guesses its witness
// nondeterministically and then skips the rest of the input.
inline Pda build_wrong_detector() {
    // Route 1: complement of the regular shape, as a DFA embedding.
    Dfa shape;
    int between = shape.add_state("w.tok");
    int inB = shape.add_state("w.b");
    int inC = shape.add_state("w.c");
    int inD = shape.add_state("w.d");
    int inE = shape.add_state("w.e");
    int afterA = shape.add_state("w.a");
    int bad = shape.add_state("w.bad");
    shape.alphabet = kSurfaceAlphabet;
    shape.initial = between;
    // The complement accepts every word NOT of the clean shape: flip the
    // accepting set of the shape DFA (accepting = between tokens).
    shape.finals = {afterA, inB, inC, inD, inE, bad};
    auto t = [&](int q, char c, int p) { shape.trans[{q, c}] = p; };
    for (char c : std::string("01")) {
        t(between, c, between);
        t(afterA, c, bad);
        t(inB, c, bad);
        t(inC, c, bad);
        t(inD, c, bad);
        t(inE, c, bad);
    }
    t(between, 'A', afterA);
    t(afterA, 'B', inB);
    t(inB, 'B', inB);
    t(inB, 'C', inC);
    t(inC, 'C', inC);
    t(inC, 'D', inD);
    t(inD, 'D', inD);
    t(inD, 'E', inE);
    t(inE, 'E', inE);
    t(inE, 'Z', between);
    for (char c : kSurfaceAlphabet) {
        t(bad, c, bad);
        if (!shape.trans.count({between, c})) t(between, c, bad);
        if (!shape.trans.count({afterA, c})) t(afterA, c, bad);
        if (!shape.trans.count({inB, c})) t(inB, c, bad);
        if (!shape.trans.count({inC, c})) t(inC, c, bad);
        if (!shape.trans.count({inD, c})) t(inD, c, bad);
        if (!shape.trans.count({inE, c})) t(inE, c, bad);
    }
    Pda route1 = from_dfa(shape);

    // Route 2: adjacent-block count mismatch inside a well-shaped segment.
    // Three branches, one per adjacent pair (B,C), (C,D), (D,E): skip any
    // prefix, pick an A, count the first block of the pair on the stack,
    // pop it against the second, and accept on a surplus either way.
    Pda m;
    m.input_alphabet = kSurfaceAlphabet;
    int Z0 = m.add_stack_symbol("Z0");
    int X = m.add_stack_symbol("X");
    int scan = m.add_state("scan");
    int ok = m.add_state("ok");  // witness found; skip the rest
    m.initial = scan;
    m.bottom = Z0;
    m.finals = {ok};
    for (char c : kSurfaceAlphabet) {
        m.add_transition(scan, c, Z0, scan, {Z0});
        m.add_transition(ok, c, Z0, ok, {Z0});
        m.add_transition(ok, c, X, ok, {X});
    }
    // Drop leftover counters once the witness is found.
    m.add_transition(ok, kEpsilon, X, ok, {});

    struct Branch {
        char skip1;       // block to pass over after A ('\0' for none)
        char skip2;       // second block to pass over ('\0' for none)
        char count;       // block counted onto the stack
        char against;     // block popped against the count
    };
    const Branch branches[] = {
        {'\0', '\0', 'B', 'C'},
        {'B', '\0', 'C', 'D'},
        {'B', 'C', 'D', 'E'},
    };
    int bi = 0;
    for (const Branch& br : branches) {
        std::string tag = "m" + std::to_string(bi++) + ".";
        int afterA2 = m.add_state(tag + "a");
        int cnt = m.add_state(tag + "cnt");
        int pop = m.add_state(tag + "pop");
        // pick this A as the witness segment
        m.add_transition(scan, 'A', Z0, afterA2, {Z0});
        int cur = afterA2;
        for (char skip : {br.skip1, br.skip2}) {
            if (skip == '\0') continue;
            int in_skip = m.add_state(tag + std::string("skip_") + skip);
            m.add_transition(cur, skip, Z0, in_skip, {Z0});
            m.add_transition(in_skip, skip, Z0, in_skip, {Z0});
            cur = in_skip;
        }
        m.add_transition(cur, br.count, Z0, cnt, {X, Z0});
        m.add_transition(cnt, br.count, X, cnt, {X, X});
        // second block pops the count
        m.add_transition(cnt, br.against, X, pop, {});
        m.add_transition(pop, br.against, X, pop, {});
        // surplus in the second block: counters exhausted, another one follows
        m.add_transition(pop, br.against, Z0, ok, {Z0});
        // surplus in the first block: the second ended with counters left
        for (char c : kSurfaceAlphabet)
            if (c != br.against) m.add_transition(pop, c, X, ok, {X});
    }

    return union_pda(route1, m);
}

inline Pda build_b() { return union_pda(build_main(), build_wrong_detector()); }

}  // namespace eraser

#endif
