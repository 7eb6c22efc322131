#pragma once

#include "dfamin/apn.hpp"
#include "dfamin/dfa.hpp"
#include "dfamin/reduction_params.hpp"

namespace dfamin {

/// The witness automaton derived from a satisfying valuation. Its language
/// is exactly the positive set plus M*r + s(s+T-1) error words, and its
/// state count is omega1 + omega2 + r: the per-variable descent needs d+1
/// states (entry through branch point) where the closed-form census budgets
/// d, so the formula undercounts by one state per variable. See the audit
/// report for how this interacts with the size bound n.
///
/// The clause state for C_j routes on 'b' to the descent of the smallest
/// variable index that satisfies the clause under nu. Throws
/// std::invalid_argument when nu does not satisfy the instance. All
/// transitions not fixed by the construction go to the rejecting sink.
Dfa build_witness_dfa(const ApnSatInstance& inst, const ReductionParams& params,
                      const Valuation& nu);

} // namespace dfamin
