#pragma once

#include "dfamin/apn.hpp"
#include "dfamin/bigint.hpp"

namespace dfamin {

/// Parameter record of the reduction. Proof-scale parameters are derived
/// from the instance shape alone:
///   M = 3(s+r), T = 2s+3r, k = s(T+s-1) + M r,
///   omega2 = 18 + s + M + 4k + r + 2rs + r^2 T, d = omega2 + 1,
///   omega1 = d(2+r), n = omega1 + omega2, m = 2n-2.
struct ReductionParams {
    unsigned r = 0; // after padding to at least two variables
    unsigned s = 0;
    BigInt M, T, k, d, omega1, omega2, n, m;
    bool proof_scale = true;
};

struct AssumptionReport {
    bool a = false; // m >= 2 max|u| + max(r, d)
    bool b = false; // k < M T
    bool c = false; // n < d(2+r) + d
    bool d = false; // k <= s(T+s-1) + M r
    BigInt max_word_length;

    bool all() const { return a && b && c && d; }
};

/// Proof-scale parameters for the instance (padded to r >= 2). The six
/// inequalities the hardness argument relies on are re-verified
/// arithmetically; a violation is a logic error.
ReductionParams choose_params(const ApnSatInstance& inst);

/// User-supplied small parameters for exploration; derived quantities use
/// the same formulas but d is taken as given and no inequality is enforced
/// (the assumption report says which ones break).
ReductionParams tiny_params(const ApnSatInstance& inst, BigInt k, BigInt d, BigInt T, BigInt M);

AssumptionReport check_assumptions(const ApnSatInstance& inst, const ReductionParams& params);

} // namespace dfamin
