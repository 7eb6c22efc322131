#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "dfamin/alphabet.hpp"

namespace dfamin {

using State = std::uint32_t;

/// Total deterministic finite automaton. delta is stored row-major:
/// delta[q * sigma + a] is the successor of state q on symbol a, and is
/// valid for every cell (totality is enforced at construction).
/// Instances are immutable values; all operations on them are pure.
class Dfa {
public:
    Dfa(Alphabet alphabet, State n_states, State init,
        std::vector<State> delta, std::set<State> final);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t sigma() const { return alphabet_.size(); }
    State n_states() const { return n_states_; }
    State init() const { return init_; }
    State next(State q, Symbol a) const { return delta_[q * sigma() + a]; }
    const std::vector<State>& delta() const { return delta_; }
    const std::set<State>& final() const { return final_; }
    bool is_final(State q) const { return final_.count(q) != 0; }

    bool operator==(const Dfa& other) const = default;

    /// One-state DFA over `alphabet` accepting every word.
    static Dfa trivial_accepting(Alphabet alphabet);

    /// Structurally identical DFA whose initial state is index 0
    /// (states 0 and init swapped). Used for canonical serialization.
    Dfa with_init_zero() const;

private:
    Alphabet alphabet_;
    State n_states_;
    State init_;
    std::vector<State> delta_;
    std::set<State> final_;
};

/// Runs the automaton from `from` over w and returns the state reached;
/// delta_star(dfa, q, epsilon) == q. Throws std::invalid_argument if w
/// contains a symbol index outside the alphabet.
State delta_star(const Dfa& dfa, State from, const Word& w);

/// True iff delta_star from the initial state lands in a final state.
bool accepts(const Dfa& dfa, const Word& w);

} // namespace dfamin
