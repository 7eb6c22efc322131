#include "dfamin/bench.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dfamin/counting.hpp"
#include "dfamin/errors.hpp"
#include "dfamin/heuristic.hpp"
#include "dfamin/oracle.hpp"

namespace dfamin {

std::string to_string(BenchStatus status) {
    switch (status) {
        case BenchStatus::Ok: return "ok";
        case BenchStatus::Timeout: return "timeout";
        case BenchStatus::Unavailable: return "unavailable";
    }
    return "?";
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("pearson: length mismatch");
    const std::size_t n = xs.size();
    if (n < 2) throw std::invalid_argument("pearson needs at least two points");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= double(n);
    my /= double(n);
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0 || syy == 0)
        throw std::invalid_argument("pearson is undefined for a constant vector");
    return sxy / std::sqrt(sxx * syy);
}

std::optional<Word> sample_accepted_word(const Dfa& dfa, unsigned len, Rng& rng) {
    // suffix_counts[j][q] = number of length-j words leading from q into F
    std::vector<CountVector> suffix_counts(len + 1, CountVector(dfa.n_states(), BigInt(0)));
    for (State q = 0; q < dfa.n_states(); ++q)
        if (dfa.is_final(q)) suffix_counts[0][q] = 1;
    for (unsigned j = 1; j <= len; ++j)
        for (State q = 0; q < dfa.n_states(); ++q)
            for (Symbol a = 0; a < dfa.sigma(); ++a)
                suffix_counts[j][q] += suffix_counts[j - 1][dfa.next(q, a)];

    if (suffix_counts[len][dfa.init()].is_zero()) return std::nullopt;

    Word w;
    State q = dfa.init();
    for (unsigned remaining = len; remaining > 0; --remaining) {
        const BigInt& total = suffix_counts[remaining][q];
        if (total > std::numeric_limits<std::uint64_t>::max())
            throw GuardError("conditional sampling weights exceed 64 bits");
        BigInt pick = uniform_index(rng, total.convert_to<std::uint64_t>());
        for (Symbol a = 0; a < dfa.sigma(); ++a) {
            const BigInt& weight = suffix_counts[remaining - 1][dfa.next(q, a)];
            if (pick < weight) {
                w.push_back(a);
                q = dfa.next(q, a);
                break;
            }
            pick -= weight;
        }
    }
    return w;
}

Sample generate_experiment_sample(std::uint64_t seed) {
    Rng rng(seed);
    const Alphabet alphabet = Alphabet::indexed(3);
    const unsigned max_len = 10;
    for (unsigned attempt = 0; attempt < 1000; ++attempt) {
        const unsigned n = 1 + static_cast<unsigned>(uniform_index(rng, 10));
        std::vector<State> delta(std::size_t(n) * 3);
        for (auto& cell : delta) cell = static_cast<State>(uniform_index(rng, n));
        std::set<State> final;
        do {
            final.clear();
            for (State q = 0; q < n; ++q)
                if (uniform_index(rng, 2) == 1) final.insert(q);
        } while (final.empty());
        Dfa hidden(alphabet, n, 0, std::move(delta), std::move(final));

        // Accepted-word counts per length, rng-free probe for emptiness.
        CountVector suffix(hidden.n_states(), BigInt(0));
        for (State q = 0; q < n; ++q)
            if (hidden.is_final(q)) suffix[q] = 1;
        bool any_accepted = false;
        for (unsigned len = 1; len <= max_len && !any_accepted; ++len) {
            CountVector next(hidden.n_states(), BigInt(0));
            for (State q = 0; q < n; ++q)
                for (Symbol a = 0; a < 3; ++a) next[q] += suffix[hidden.next(q, a)];
            suffix = std::move(next);
            any_accepted = !suffix[hidden.init()].is_zero();
        }
        if (!any_accepted) continue; // redraw the hidden DFA

        std::vector<Word> words;
        unsigned drawn = 0;
        while (drawn < 1000) {
            const unsigned len = 1 + static_cast<unsigned>(uniform_index(rng, max_len));
            std::optional<Word> w = sample_accepted_word(hidden, len, rng);
            if (!w) continue; // that length has no accepted word: resample length
            words.push_back(std::move(*w));
            ++drawn;
        }
        return Sample(alphabet, std::move(words)); // constructor deduplicates
    }
    throw std::runtime_error("could not draw a hidden DFA accepting any word of length <= 10");
}

std::string bench_csv_header() {
    return "instance,algo,n,seed,start_score,final_score,ms,status";
}

std::string to_csv_row(const BenchRecord& rec) {
    std::ostringstream out;
    out << rec.instance << ',' << rec.algo << ',' << rec.n << ',' << rec.seed << ',';
    if (rec.start_score) out << rec.start_score->str();
    out << ',';
    if (rec.final_score) out << rec.final_score->str();
    out << ',' << rec.ms << ',' << to_string(rec.status);
    return out.str();
}

std::vector<BenchRecord> parse_bench_csv(const std::string& text) {
    std::vector<BenchRecord> records;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == bench_csv_header()) continue;
        std::vector<std::string> fields;
        std::istringstream row(line);
        std::string field;
        while (std::getline(row, field, ',')) fields.push_back(field);
        while (fields.size() < 8) fields.push_back(""); // trailing empties
        if (fields.size() != 8) throw ParseError("bad CSV row", lineno);
        BenchRecord rec;
        rec.instance = fields[0];
        rec.algo = fields[1];
        rec.n = static_cast<unsigned>(std::stoul(fields[2]));
        rec.seed = std::stoull(fields[3]);
        if (!fields[4].empty()) rec.start_score = BigInt(fields[4]);
        if (!fields[5].empty()) rec.final_score = BigInt(fields[5]);
        rec.ms = std::stoll(fields[6]);
        if (fields[7] == "ok")
            rec.status = BenchStatus::Ok;
        else if (fields[7] == "timeout")
            rec.status = BenchStatus::Timeout;
        else if (fields[7] == "unavailable")
            rec.status = BenchStatus::Unavailable;
        else
            throw ParseError("bad status: " + fields[7], lineno);
        records.push_back(std::move(rec));
    }
    return records;
}

namespace {

using Clock = std::chrono::steady_clock;

struct AlgoOutcome {
    std::optional<BigInt> start;
    std::optional<BigInt> score;
};

AlgoOutcome run_algorithm(const std::string& algo, const Sample& sample, unsigned n,
                          std::uint64_t seed, const BenchOptions& opts,
                          const Deadline& deadline) {
    if (algo == "heuristic") {
        HeuristicConfig cfg;
        cfg.init_rand = opts.init_rand;
        cfg.nb_run = opts.nb_run;
        cfg.seed = seed;
        cfg.n = n;
        // Replays run 0's initialization to report the pre-climb score.
        Rng rng(seed);
        std::optional<BigInt> start;
        for (unsigned i = 0; i < cfg.init_rand; ++i) {
            BigInt s = ts_score(random_transition_system(sample.alphabet(), n, rng), sample, n)
                           .first;
            if (!start || s < *start) start = std::move(s);
        }
        ScoredDfa result = min_score_learn(sample, cfg, deadline);
        return {std::move(start), std::move(result.score)};
    }
    if (algo == "oracle") {
        OracleOptions oracle_opts;
        oracle_opts.deadline = deadline;
        return {std::nullopt, enumerate_min_count(sample, n, oracle_opts).min_count};
    }
    if (algo == "ilp" || algo == "ilp-binary-search") {
        if (!opts.solver) throw SolverUnavailable("no solver configured");
        MinimizeResult result = algo == "ilp" ? solve_min(sample, n, opts.solver)
                                              : binary_search_min(sample, n, opts.solver);
        return {std::nullopt, std::move(result.count)};
    }
    throw std::invalid_argument("unknown algorithm: " + algo);
}

} // namespace

std::vector<BenchRecord> run_bench(const Sample& sample, unsigned n,
                                   const std::vector<std::string>& algorithms,
                                   const BenchOptions& opts, const std::string& csv_path) {
    std::vector<BenchRecord> records;
    for (const std::string& algo : algorithms) {
        for (unsigned run = 0; run < opts.runs; ++run) {
            BenchRecord rec;
            rec.instance = opts.instance;
            rec.algo = algo;
            rec.n = n;
            rec.seed = opts.seed + run;

            const Clock::time_point start = Clock::now();
            Deadline deadline;
            if (opts.timeout_ms > 0)
                deadline = start + std::chrono::milliseconds(opts.timeout_ms);
            try {
                AlgoOutcome outcome = run_algorithm(algo, sample, n, rec.seed, opts, deadline);
                rec.start_score = std::move(outcome.start);
                rec.final_score = std::move(outcome.score);
                rec.status = BenchStatus::Ok;
            } catch (const TimeoutExceeded&) {
                rec.status = BenchStatus::Timeout;
            } catch (const SolverUnavailable&) {
                rec.status = BenchStatus::Unavailable;
            }
            rec.ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
                         .count();
            // Cooperative checks only run between units of work; enforce the
            // budget on completion as well.
            if (rec.status == BenchStatus::Ok && opts.timeout_ms > 0 && rec.ms > opts.timeout_ms) {
                rec.status = BenchStatus::Timeout;
                rec.start_score.reset();
                rec.final_score.reset();
            }
            records.push_back(std::move(rec));
        }
    }

    if (!csv_path.empty()) {
        const bool fresh =
            !std::filesystem::exists(csv_path) || std::filesystem::file_size(csv_path) == 0;
        std::ofstream out(csv_path, std::ios::app);
        if (!out) throw std::runtime_error("cannot write " + csv_path);
        if (fresh) out << bench_csv_header() << '\n';
        for (const BenchRecord& rec : records) out << to_csv_row(rec) << '\n';
    }
    return records;
}

} // namespace dfamin
