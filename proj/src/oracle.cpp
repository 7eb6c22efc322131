#include "dfamin/oracle.hpp"

#include <set>

#include "dfamin/compare.hpp"
#include "dfamin/counting.hpp"
#include "dfamin/errors.hpp"

namespace dfamin {

namespace {

BigInt enumeration_size(unsigned n, std::size_t sigma) {
    BigInt tables = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(n * sigma));
    return tables << n; // * 2^n final sets
}

void check_guard(const Sample& sample, unsigned n, const OracleOptions& opts) {
    if (n == 0) throw std::invalid_argument("state bound must be >= 1");
    BigInt size = enumeration_size(n, sample.sigma());
    if (size > opts.guard_limit)
        throw GuardError("oracle enumeration of " + size.str() + " DFAs exceeds guard limit " +
                         std::to_string(opts.guard_limit));
}

void poll(const Deadline& deadline) {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
        throw TimeoutExceeded("oracle enumeration timed out");
}

// Calls fn for every total transition table on n states, in row-major
// lexicographic order.
template <typename Fn>
void for_each_table(unsigned n, std::size_t sigma, Fn&& fn) {
    std::vector<State> delta(std::size_t(n) * sigma, 0);
    for (;;) {
        fn(delta);
        std::size_t pos = delta.size();
        while (pos > 0) {
            --pos;
            if (++delta[pos] < n) break;
            delta[pos] = 0;
        }
        if (pos == 0 && delta[0] == 0) break;
    }
}

// States reached from state 0 by the sample's words, as a bitmask, plus the
// per-state counts summed over lengths 0..horizon.
struct TableFacts {
    std::uint32_t required_final; // bitmask of states the final set must contain
    std::vector<BigInt> count_sums;
};

TableFacts table_facts(const Dfa& dfa, const Sample& sample, unsigned horizon) {
    TableFacts facts{0, std::vector<BigInt>(dfa.n_states(), BigInt(0))};
    for (State q : states_reached(dfa, 0, sample)) facts.required_final |= 1u << q;
    CountVector counts = initial_counts(dfa);
    for (unsigned len = 0;; ++len) {
        for (State q = 0; q < dfa.n_states(); ++q) facts.count_sums[q] += counts[q];
        if (len == horizon) break;
        counts = step_counts(dfa, counts);
    }
    return facts;
}

} // namespace

OracleResult enumerate_min_count(const Sample& sample, unsigned n, const OracleOptions& opts) {
    check_guard(sample, n, opts);
    const unsigned horizon = opts.horizon.value_or(2 * n - 2);
    const std::uint32_t all_finals = (n >= 32) ? ~0u : (1u << n) - 1;

    std::optional<BigInt> best;
    std::optional<Dfa> witness;
    std::uint64_t enumerated = 0;
    unsigned tick = 0;

    for_each_table(n, sample.sigma(), [&](const std::vector<State>& delta) {
        if (++tick % 1024 == 0) poll(opts.deadline);
        Dfa shell(sample.alphabet(), n, 0, delta, {});
        TableFacts facts = table_facts(shell, sample, horizon);
        for (std::uint32_t mask = 0; mask <= all_finals; ++mask) {
            ++enumerated;
            if ((mask & facts.required_final) != facts.required_final) continue;
            BigInt count = 0;
            for (State q = 0; q < n; ++q)
                if (mask & (1u << q)) count += facts.count_sums[q];
            if (!best || count < *best) {
                best = std::move(count);
                std::set<State> final;
                for (State q = 0; q < n; ++q)
                    if (mask & (1u << q)) final.insert(q);
                witness = Dfa(sample.alphabet(), n, 0, delta, std::move(final));
            }
        }
    });

    return OracleResult{std::move(*best), std::move(*witness), enumerated};
}

bool decide_problem1(const Sample& sample, unsigned n, const BigInt& k,
                     const OracleOptions& opts) {
    return enumerate_min_count(sample, n, opts).min_count <= k;
}

bool certify_language_minimal(const Dfa& dfa, const Sample& sample, unsigned n,
                              const OracleOptions& opts) {
    check_guard(sample, n, opts);
    if (!dfa.alphabet().compatible_with(sample.alphabet()))
        throw std::invalid_argument("alphabet mismatch");
    const std::uint32_t all_finals = (n >= 32) ? ~0u : (1u << n) - 1;

    bool minimal = true;
    unsigned tick = 0;
    for_each_table(n, sample.sigma(), [&](const std::vector<State>& delta) {
        if (!minimal) return;
        if (++tick % 1024 == 0) poll(opts.deadline);
        Dfa shell(sample.alphabet(), n, 0, delta, {});
        std::uint32_t required = 0;
        for (State q : states_reached(shell, 0, sample)) required |= 1u << q;
        for (std::uint32_t mask = 0; mask <= all_finals; ++mask) {
            if ((mask & required) != required) continue;
            std::set<State> final;
            for (State q = 0; q < n; ++q)
                if (mask & (1u << q)) final.insert(q);
            Dfa candidate(sample.alphabet(), n, 0, delta, std::move(final));
            if (language_relation(candidate, dfa) == LanguageRelation::AStrictSubsetB) {
                minimal = false;
                return;
            }
        }
    });
    return minimal;
}

} // namespace dfamin
