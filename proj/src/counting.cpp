#include "dfamin/counting.hpp"

#include <stdexcept>

namespace dfamin {

CountVector initial_counts(const Dfa& dfa) {
    CountVector counts(dfa.n_states(), BigInt(0));
    counts[dfa.init()] = 1;
    return counts;
}

CountVector step_counts(const Dfa& dfa, const CountVector& counts) {
    CountVector next(dfa.n_states(), BigInt(0));
    for (State q = 0; q < dfa.n_states(); ++q) {
        if (counts[q].is_zero()) continue;
        for (Symbol a = 0; a < dfa.sigma(); ++a) next[dfa.next(q, a)] += counts[q];
    }
    return next;
}

BigInt count_accepted_up_to(const Dfa& dfa, unsigned m) {
    // Double-buffered in-place variant of step_counts; the buffers keep
    // their allocated limbs across iterations, which matters at the long
    // horizons the reduction audit uses.
    CountVector cur = initial_counts(dfa);
    CountVector nxt(dfa.n_states(), BigInt(0));
    BigInt total = 0;
    for (unsigned len = 0;; ++len) {
        for (State q : dfa.final()) total += cur[q];
        if (len == m) break;
        for (auto& c : nxt) c = 0;
        for (State q = 0; q < dfa.n_states(); ++q) {
            if (cur[q].is_zero()) continue;
            for (Symbol a = 0; a < dfa.sigma(); ++a) nxt[dfa.next(q, a)] += cur[q];
        }
        cur.swap(nxt);
    }
    return total;
}

BigInt words_up_to(std::size_t sigma, unsigned m) {
    if (sigma == 0) throw std::invalid_argument("alphabet size must be positive");
    if (sigma == 1) return BigInt(m) + 1;
    BigInt power = boost::multiprecision::pow(BigInt(sigma), m + 1);
    return (power - 1) / (BigInt(sigma) - 1);
}

BigInt max_count(unsigned n, std::size_t sigma) {
    if (n == 0) throw std::invalid_argument("state bound must be positive");
    if (sigma < 2)
        throw std::invalid_argument("max_count requires sigma >= 2; use words_up_to for unary");
    return words_up_to(sigma, 2 * n - 2);
}

} // namespace dfamin
