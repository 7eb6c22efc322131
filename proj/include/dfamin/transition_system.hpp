#pragma once

#include <utility>
#include <vector>

#include "dfamin/bigint.hpp"
#include "dfamin/dfa.hpp"
#include "dfamin/sample.hpp"

namespace dfamin {

/// A DFA stripped of initial and final structure; the search point of the
/// heuristic. delta has the same row-major layout as Dfa.
struct TransitionSystem {
    Alphabet alphabet;
    State n_states;
    std::vector<State> delta;

    std::size_t sigma() const { return alphabet.size(); }
    State next(State q, Symbol a) const { return delta[q * sigma() + a]; }

    bool operator==(const TransitionSystem& other) const {
        return n_states == other.n_states && delta == other.delta &&
               alphabet.names() == other.alphabet.names();
    }
};

/// DFA obtained from `ts` by starting at `start` and making final exactly
/// the states reached by words of the sample. Among all final sets that make
/// the sample accepted this one minimizes the accepted-word count at every
/// length, so the result is in Rec(P, n) with the least possible counts for
/// this (ts, start).
Dfa derive_dfa(const TransitionSystem& ts, State start, const Sample& sample);

/// Score of a transition system: the minimum over start states q of
/// |L(derive_dfa(ts, q, P)) ∩ Sigma^{<= 2n-2}|, paired with the smallest
/// start state attaining it.
std::pair<BigInt, State> ts_score(const TransitionSystem& ts, const Sample& sample,
                                  unsigned n);

} // namespace dfamin
