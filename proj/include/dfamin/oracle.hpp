#pragma once

#include <cstdint>
#include <optional>

#include "dfamin/bigint.hpp"
#include "dfamin/dfa.hpp"
#include "dfamin/heuristic.hpp"
#include "dfamin/sample.hpp"

namespace dfamin {

/// Ground truth on small instances by exhausting Rec(P, n) with the initial
/// state fixed at 0 (harmless by renaming).
struct OracleResult {
    BigInt min_count;
    Dfa witness;          // first optimum in enumeration order
    std::uint64_t enumerated = 0; // DFAs inspected (table, final-set pairs)
};

struct OracleOptions {
    /// Enumeration is refused when n^(n*sigma) * 2^n exceeds this.
    std::uint64_t guard_limit = 10'000'000;
    /// Counting horizon; defaults to 2n-2.
    std::optional<unsigned> horizon;
    Deadline deadline;
};

/// Exact minimum of |L(A) ∩ Sigma^{<=2n-2}| over all A in Rec(P, n), with a
/// deterministic witness: transition tables are enumerated in row-major
/// lexicographic order, final sets as ascending bitmasks.
OracleResult enumerate_min_count(const Sample& sample, unsigned n,
                                 const OracleOptions& opts = {});

/// Decides whether some A in Rec(P, n) has |L(A) ∩ Sigma^{<=2n-2}| <= k.
bool decide_problem1(const Sample& sample, unsigned n, const BigInt& k,
                     const OracleOptions& opts = {});

/// True iff no enumerated member of Rec(P, n) has a language strictly
/// included in L(dfa).
bool certify_language_minimal(const Dfa& dfa, const Sample& sample, unsigned n,
                              const OracleOptions& opts = {});

} // namespace dfamin
