#include "dfamin/heuristic.hpp"

#include <stdexcept>

#include "dfamin/counting.hpp"
#include "dfamin/errors.hpp"

namespace dfamin {

namespace {

void poll(const Deadline& deadline) {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
        throw TimeoutExceeded("heuristic search timed out");
}

} // namespace

void HeuristicConfig::validate() const {
    if (init_rand == 0 || nb_run == 0)
        throw std::invalid_argument("init_rand and nb_run must be >= 1");
    if (n == 0) throw std::invalid_argument("state bound must be >= 1");
}

TransitionSystem random_transition_system(const Alphabet& alphabet, unsigned n, Rng& rng) {
    if (n == 0) throw std::invalid_argument("state bound must be >= 1");
    std::vector<State> delta(std::size_t(n) * alphabet.size());
    for (auto& cell : delta) cell = static_cast<State>(uniform_index(rng, n));
    return TransitionSystem{alphabet, n, std::move(delta)};
}

std::pair<TransitionSystem, BigInt> hill_climb(TransitionSystem ts, const Sample& sample,
                                               unsigned n, const Deadline& deadline) {
    BigInt current = ts_score(ts, sample, n).first;
    const std::size_t sigma = ts.sigma();
    for (;;) {
        poll(deadline);
        BigInt best = current;
        State best_q = 0, best_target = 0;
        Symbol best_a = 0;
        bool improved = false;
        for (State q = 0; q < ts.n_states; ++q) {
            for (Symbol a = 0; a < sigma; ++a) {
                const State original = ts.next(q, a);
                for (State target = 0; target < ts.n_states; ++target) {
                    if (target == original) continue; // no-op move
                    ts.delta[q * sigma + a] = target;
                    BigInt score = ts_score(ts, sample, n).first;
                    if (score < best) {
                        best = score;
                        best_q = q;
                        best_a = a;
                        best_target = target;
                        improved = true;
                    }
                }
                ts.delta[q * sigma + a] = original;
            }
        }
        if (!improved) return {std::move(ts), std::move(current)};
        ts.delta[best_q * sigma + best_a] = best_target;
        current = best;
    }
}

ScoredDfa min_score_learn(const Sample& sample, const HeuristicConfig& cfg,
                          const Deadline& deadline) {
    cfg.validate();
    if (sample.sigma() == 0) throw std::invalid_argument("degenerate alphabet");
    const unsigned n = cfg.n;

    std::optional<TransitionSystem> total_best;
    BigInt total_best_score;
    for (unsigned run = 0; run < cfg.nb_run; ++run) {
        poll(deadline);
        Rng rng(cfg.seed + run);
        std::optional<TransitionSystem> best;
        BigInt best_score;
        for (unsigned draw = 0; draw < cfg.init_rand; ++draw) {
            TransitionSystem ts = random_transition_system(sample.alphabet(), n, rng);
            BigInt score = ts_score(ts, sample, n).first;
            if (!best || score < best_score) {
                best_score = std::move(score);
                best = std::move(ts);
            }
        }
        auto [climbed, score] = hill_climb(std::move(*best), sample, n, deadline);
        if (!total_best || score < total_best_score) {
            total_best_score = std::move(score);
            total_best = std::move(climbed);
        }
    }

    auto [score, start] = ts_score(*total_best, sample, n);
    return ScoredDfa{derive_dfa(*total_best, start, sample), std::move(score), start};
}

} // namespace dfamin
