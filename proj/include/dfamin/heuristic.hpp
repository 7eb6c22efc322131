#pragma once

#include <chrono>
#include <optional>

#include "dfamin/rng.hpp"
#include "dfamin/transition_system.hpp"

namespace dfamin {

/// Optional cooperative deadline; long-running searches poll it and throw
/// TimeoutExceeded when expired.
using Deadline = std::optional<std::chrono::steady_clock::time_point>;

struct HeuristicConfig {
    unsigned init_rand = 100;
    unsigned nb_run = 50;
    std::uint64_t seed = 0;
    unsigned n = 1; // state bound

    void validate() const;
};

struct ScoredDfa {
    Dfa dfa;
    BigInt score; // count_accepted_up_to(dfa, 2n-2) for the n it was built with
    State start_state;
};

/// Transition system with every cell drawn independently and uniformly from
/// 0..n-1. Identical rng state reproduces identical systems.
TransitionSystem random_transition_system(const Alphabet& alphabet, unsigned n, Rng& rng);

/// Best-improvement hill climbing over single-transition changes
/// T[q, a -> q']. Each step evaluates every move, commits the strictest
/// improvement (ties broken by smallest (q, a, q')), and stops at a local
/// minimum. The returned score never exceeds the input score.
std::pair<TransitionSystem, BigInt> hill_climb(TransitionSystem ts, const Sample& sample,
                                               unsigned n, const Deadline& deadline = {});

/// Randomized-restart search: nb_run rounds of (best of init_rand random
/// systems, then hill_climb), keeping the best system overall; the result is
/// the derived DFA at its best start state. Deterministic for a fixed
/// config: run i seeds its own generator with seed + i.
ScoredDfa min_score_learn(const Sample& sample, const HeuristicConfig& cfg,
                          const Deadline& deadline = {});

} // namespace dfamin
