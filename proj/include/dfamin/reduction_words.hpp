#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dfamin/apn.hpp"
#include "dfamin/bigint.hpp"
#include "dfamin/sample.hpp"

namespace dfamin {

struct ReductionParams;

namespace reduction {

inline constexpr Symbol A = 0;
inline constexpr Symbol B = 1;

/// The i-element block { beta^x . alpha | 1 <= x <= i } over {a, b}, where
/// beta is the other letter. This is the cardinality the construction's
/// chains realize and the error arithmetic requires.
std::vector<Word> u_block(std::uint64_t i, Symbol alpha);

} // namespace reduction

/// Words prefix . mid . infix . suffix for every (mid, suffix) pair. The mid
/// sets used here are prefix-free, so all count() words are distinct.
struct WordBlock {
    Word prefix;
    std::vector<Word> mids;     // {epsilon} when unused
    Word infix;
    std::vector<Word> suffixes;

    BigInt count() const { return BigInt(mids.size()) * suffixes.size(); }
    std::size_t max_length() const;
    void for_each(const std::function<void(const Word&)>& fn) const;
};

struct Stratum {
    std::string label;
    std::vector<WordBlock> blocks;

    BigInt count() const;
};

/// The positive word set of the reduction, stored as symbolic strata; the
/// strata are pairwise disjoint so counts add up. Expansion is on demand.
class ReductionWordSet {
public:
    ReductionWordSet(Alphabet alphabet, std::vector<Stratum> strata, BigInt ind_overlaps)
        : alphabet_(std::move(alphabet)),
          strata_(std::move(strata)),
          ind_overlaps_(std::move(ind_overlaps)) {}

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Stratum>& strata() const { return strata_; }

    BigInt total_count() const;
    /// |P ∩ Sigma^{<= m}|.
    BigInt count_within(std::uint64_t m) const;
    std::size_t max_length() const;
    /// Indices produced more than once by the exponent-set formulas and
    /// dropped by set semantics (surfaced for the audit; 0 in practice).
    const BigInt& ind_overlaps() const { return ind_overlaps_; }

    void for_each_word(const std::function<void(const Word&)>& fn) const;

    /// Materializes every word; refuses when total_count() exceeds limit.
    Sample expand_sample(std::uint64_t limit = 5'000'000) const;

private:
    Alphabet alphabet_;
    std::vector<Stratum> strata_;
    BigInt ind_overlaps_;
};

/// Builds the positive set for the instance at the given parameters. The
/// strata: one "top" and one "bot" block, one block per variable ("var_i")
/// and two per clause ("cl_j", "cl_acc_j").
ReductionWordSet generate_positive_set(const ApnSatInstance& inst,
                                       const ReductionParams& params);

} // namespace dfamin
