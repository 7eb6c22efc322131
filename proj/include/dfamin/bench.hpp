#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dfamin/bigint.hpp"
#include "dfamin/dfa.hpp"
#include "dfamin/ilp_solve.hpp"
#include "dfamin/rng.hpp"
#include "dfamin/sample.hpp"

namespace dfamin {

enum class BenchStatus { Ok, Timeout, Unavailable };

std::string to_string(BenchStatus status);

struct BenchRecord {
    std::string instance;
    std::string algo;
    unsigned n = 0;
    std::uint64_t seed = 0;
    std::optional<BigInt> start_score;
    std::optional<BigInt> final_score; // absent on timeout/unavailable
    std::int64_t ms = 0;
    BenchStatus status = BenchStatus::Ok;

    bool operator==(const BenchRecord& other) const = default;
};

struct BenchOptions {
    std::string instance = "sample";
    unsigned runs = 1;            // repeated runs use seeds seed, seed+1, ...
    std::int64_t timeout_ms = 0;  // 0 = no timeout
    std::uint64_t seed = 0;
    SolverFn solver;              // empty: ILP algorithms report unavailable
    unsigned init_rand = 100;
    unsigned nb_run = 50;
};

/// Runs each named algorithm (heuristic | ilp | ilp-binary-search | oracle)
/// on the sample with wall-clock measurement and timeout enforcement, and
/// appends the records as CSV to csv_path (header written when the file is
/// new). Unknown algorithm names throw.
std::vector<BenchRecord> run_bench(const Sample& sample, unsigned n,
                                   const std::vector<std::string>& algorithms,
                                   const BenchOptions& opts, const std::string& csv_path);

/// CSV round-trip: header "instance,algo,n,seed,start_score,final_score,ms,status".
std::string bench_csv_header();
std::string to_csv_row(const BenchRecord& rec);
std::vector<BenchRecord> parse_bench_csv(const std::string& text);

/// Sample Pearson correlation coefficient; throws std::invalid_argument on
/// fewer than two points or a constant vector.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

/// Draws a uniformly random word among those of length `len` accepted by the
/// DFA, using suffix counts (exact conditional sampling); nullopt when no
/// accepted word of that length exists.
std::optional<Word> sample_accepted_word(const Dfa& dfa, unsigned len, Rng& rng);

/// A random learning instance shaped like the experimental protocol: a
/// hidden DFA with 1..10 states over a 3-letter alphabet (uniform
/// transitions, each state final with probability 1/2, at least one final),
/// then 1000 draws of (length uniform in 1..10, word uniform among accepted
/// words of that length), deduplicated. Identical seeds give identical
/// samples.
Sample generate_experiment_sample(std::uint64_t seed);

} // namespace dfamin
