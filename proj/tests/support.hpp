#pragma once

// Shared test fixtures: independent brute-force oracles (these must never
// call the library paths they check), the unary tightness families, and
// small random generators.

#include <optional>
#include <vector>

#include "dfamin/bigint.hpp"
#include "dfamin/dfa.hpp"
#include "dfamin/ilp_encode.hpp"
#include "dfamin/ilp_model.hpp"
#include "dfamin/ilp_solve.hpp"
#include "dfamin/oracle.hpp"
#include "dfamin/rng.hpp"
#include "dfamin/sample.hpp"

namespace testsupport {

using namespace dfamin;

// Enumerates every word of length <= m in length-lexicographic order.
template <typename Fn>
void for_each_word_up_to(std::size_t sigma, unsigned m, Fn&& fn) {
    std::vector<Word> level{Word{}};
    fn(level.front());
    for (unsigned len = 1; len <= m; ++len) {
        std::vector<Word> next;
        next.reserve(level.size() * sigma);
        for (const Word& w : level)
            for (Symbol a = 0; a < sigma; ++a) {
                Word ext = w;
                ext.push_back(a);
                fn(ext);
                next.push_back(std::move(ext));
            }
        level = std::move(next);
    }
}

// Letter-by-letter interpreter, independent of delta_star.
inline State walk_table(const Dfa& dfa, State from, const Word& w) {
    State q = from;
    for (Symbol a : w) q = dfa.delta()[q * dfa.sigma() + a];
    return q;
}

// |L(dfa) ∩ Sigma^{<= m}| by explicit enumeration through accepts().
inline BigInt brute_count(const Dfa& dfa, unsigned m) {
    BigInt count = 0;
    for_each_word_up_to(dfa.sigma(), m, [&](const Word& w) {
        if (accepts(dfa, w)) ++count;
    });
    return count;
}

// Shortest mismatching word by scanning all words up to the bound.
inline std::optional<Word> brute_witness(const Dfa& a, const Dfa& b, unsigned bound) {
    std::optional<Word> found;
    for_each_word_up_to(a.sigma(), bound, [&](const Word& w) {
        if (!found && accepts(a, w) != accepts(b, w)) found = w;
    });
    return found;
}

inline Dfa random_dfa(Rng& rng, unsigned max_states, std::size_t sigma) {
    const unsigned n = 1 + static_cast<unsigned>(uniform_index(rng, max_states));
    std::vector<State> delta(std::size_t(n) * sigma);
    for (auto& cell : delta) cell = static_cast<State>(uniform_index(rng, n));
    std::set<State> final;
    for (State q = 0; q < n; ++q)
        if (uniform_index(rng, 2)) final.insert(q);
    return Dfa(Alphabet::indexed(sigma), n, static_cast<State>(uniform_index(rng, n)),
               std::move(delta), std::move(final));
}

inline Word random_word(Rng& rng, std::size_t sigma, unsigned max_len) {
    Word w(uniform_index(rng, max_len + 1));
    for (auto& s : w) s = static_cast<Symbol>(uniform_index(rng, sigma));
    return w;
}

// Unary path automaton: q_0 -> ... -> q_{m-1}, final {q_{m-2}}, last state a
// self-loop sink. Recognizes exactly { a^{m-2} }. Requires m >= 2.
inline Dfa unary_path(unsigned m) {
    std::vector<State> delta(m);
    for (unsigned q = 0; q + 1 < m; ++q) delta[q] = q + 1;
    delta[m - 1] = m - 1;
    return Dfa(Alphabet({"a"}), m, 0, std::move(delta), {m - 2});
}

// Unary ring of n states with the final state at final_pos; recognizes
// { a^x : x ≡ final_pos (mod n) }.
inline Dfa unary_ring(unsigned n, unsigned final_pos) {
    std::vector<State> delta(n);
    for (unsigned q = 0; q < n; ++q) delta[q] = (q + 1) % n;
    return Dfa(Alphabet({"a"}), n, 0, std::move(delta), {final_pos});
}

// Model answers by exhausting init-0 DFAs, mechanically assigning every
// variable, and keeping assignments the model itself accepts. This drives
// the constraints directly, so it doubles as a soundness check of the
// encoding, and serves as the solver fallback when no external one exists.
inline IlpSolution exhaustive_model_solve(const IlpModel& model, const Sample& sample,
                                          unsigned n) {
    const std::size_t sigma = sample.sigma();
    const bool feasibility = model.objective().empty();
    IlpSolution best;
    best.status = SolveStatus::Infeasible;

    std::vector<State> delta(std::size_t(n) * sigma, 0);
    bool done = false;
    while (!done) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::set<State> final;
            for (State q = 0; q < n; ++q)
                if (mask & (1u << q)) final.insert(q);
            Dfa dfa(sample.alphabet(), n, 0, delta, std::move(final));
            auto assignment = assignment_from_dfa(sample, n, dfa);
            if (model.first_violation(assignment)) continue;
            BigInt xf = assignment.at(varname::total);
            if (best.status == SolveStatus::Infeasible || xf < best.objective_value) {
                best.status = feasibility ? SolveStatus::Feasible : SolveStatus::Optimal;
                best.assignment = std::move(assignment);
                best.objective_value = xf;
                if (feasibility) return best; // any satisfying point will do
            }
        }
        std::size_t pos = delta.size();
        done = true;
        while (pos > 0) {
            --pos;
            if (++delta[pos] < n) {
                done = false;
                break;
            }
            delta[pos] = 0;
        }
    }
    return best;
}

inline SolverFn make_exhaustive_solver(const Sample& sample, unsigned n) {
    return [&sample, n](const IlpModel& model) {
        return exhaustive_model_solve(model, sample, n);
    };
}

} // namespace testsupport
