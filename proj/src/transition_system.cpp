#include "dfamin/transition_system.hpp"

#include <set>
#include <stdexcept>

#include "dfamin/counting.hpp"

namespace dfamin {

Dfa derive_dfa(const TransitionSystem& ts, State start, const Sample& sample) {
    if (start >= ts.n_states) throw std::invalid_argument("start state out of range");
    if (!ts.alphabet.compatible_with(sample.alphabet()))
        throw std::invalid_argument("alphabet mismatch between transition system and sample");
    Dfa shell(ts.alphabet, ts.n_states, start, ts.delta, {});
    std::vector<State> reached = states_reached(shell, start, sample);
    return Dfa(ts.alphabet, ts.n_states, start, ts.delta,
               std::set<State>(reached.begin(), reached.end()));
}

std::pair<BigInt, State> ts_score(const TransitionSystem& ts, const Sample& sample,
                                  unsigned n) {
    if (ts.n_states > n) throw std::invalid_argument("transition system exceeds state bound");
    const unsigned horizon = 2 * n - 2;
    BigInt best;
    State best_start = 0;
    bool first = true;
    for (State q = 0; q < ts.n_states; ++q) {
        BigInt count = count_accepted_up_to(derive_dfa(ts, q, sample), horizon);
        if (first || count < best) {
            best = count;
            best_start = q;
            first = false;
        }
    }
    return {best, best_start};
}

} // namespace dfamin
