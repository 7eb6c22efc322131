#pragma once

#include <optional>

#include "dfamin/dfa.hpp"
#include "dfamin/reduction_params.hpp"
#include "dfamin/reduction_words.hpp"

namespace dfamin {

/// The three suitability conditions plus the assumption audit. Failures are
/// reported, never thrown.
struct SuitabilityReport {
    BigInt states;
    BigInt size_bound; // n
    bool size_ok = false;

    bool accepts_all = false;
    std::optional<Word> rejected_word; // first offender when accepts_all is false

    BigInt accepted_count;  // |L(A) ∩ Sigma^{<= m}|
    BigInt sample_count;    // |P ∩ Sigma^{<= m}|
    BigInt error_count;     // accepted - sample (valid once accepts_all holds)
    BigInt error_bound;     // k
    bool errors_ok = false; // error_count <= k

    BigInt expected_error;   // M r + s(s + T - 1)
    bool error_exact = false;

    AssumptionReport assumptions;
    BigInt ind_overlaps;

    bool suitable() const { return size_ok && accepts_all && errors_ok; }
};

/// Checks the suitability conditions of `dfa` against the word set: the
/// size bound, acceptance of every positive word (streamed, one automaton
/// walk per word), and the error budget. The error count is computed as
/// count_accepted_up_to(dfa, m) - |P ∩ Sigma^{<= m}|, which is exact when
/// every positive word is accepted and no longer than m.
SuitabilityReport audit_suitability(const Dfa& dfa, const ReductionWordSet& words,
                                    const ApnSatInstance& inst, const ReductionParams& params);

struct Problem1Instance {
    Sample sample;
    BigInt n;
    BigInt k_prime; // k + |P|
};

/// Packages the reduction output as a decision-problem instance with
/// k' = k + |P| (generated whether or not the instance is satisfiable).
Problem1Instance problem1_instance(const ApnSatInstance& inst);

} // namespace dfamin
