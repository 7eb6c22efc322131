#pragma once

#include <vector>

#include "dfamin/bigint.hpp"
#include "dfamin/dfa.hpp"

namespace dfamin {

/// Per-state counts N(q, m) = |{ w in Sigma^m : delta_star(init, w) = q }|
/// for one fixed length m. By determinism and totality the entries sum to
/// sigma^m.
using CountVector = std::vector<BigInt>;

/// N(q, 0): 1 at the initial state, 0 elsewhere.
CountVector initial_counts(const Dfa& dfa);

/// One step of the recurrence:
/// N(q, m+1) = sum_q' N(q', m) * |{ a : delta(q', a) = q }|.
CountVector step_counts(const Dfa& dfa, const CountVector& counts);

/// Exact |L(dfa) ∩ Sigma^{<= m}|, computed by iterating the recurrence and
/// accumulating the final-state entries for every length 0..m.
BigInt count_accepted_up_to(const Dfa& dfa, unsigned m);

/// |Sigma^{<= m}| for an alphabet of the given size (handles sigma = 1).
BigInt words_up_to(std::size_t sigma, unsigned m);

/// (sigma^{2n-1} - 1) / (sigma - 1), the ceiling used by the binary search.
/// Requires sigma >= 2; for unary alphabets use words_up_to(1, 2n-2) = 2n-1.
BigInt max_count(unsigned n, std::size_t sigma);

} // namespace dfamin
