#pragma once

#include <map>
#include <optional>

#include "dfamin/dfa.hpp"
#include "dfamin/ilp_model.hpp"
#include "dfamin/sample.hpp"

namespace dfamin {

/// Canonical variable names. prefix_id is the breadth-first symbol-ordered
/// numbering of the sample's prefix trie (epsilon = 0).
namespace varname {
std::string transition(State p, Symbol a, State q);           // t_p_a_q
std::string final_state(State q);                             // f_q
std::string word(std::size_t prefix_id, State q);             // w_id_q
std::string count(State q, unsigned k);                       // c_q_k
std::string count_product(State p, Symbol a, State q, unsigned k); // cp_p_a_q_k
std::string final_count(State q, unsigned k);                 // cf_q_k
inline const std::string total = "xF";
} // namespace varname

/// Integer program whose feasible points are exactly the n-state DFAs (with
/// initial state 0) accepting every word of the sample, with xF bounding
/// their number of accepted words of length at most 2n-2 from above. The
/// objective minimizes xF; at the optimum xF equals the count of the encoded
/// DFA. When `bound` is set the objective is dropped and the constraint
/// xF <= bound is added instead (the feasibility query of the binary search).
IlpModel build_model(const Sample& sample, unsigned n,
                     const std::optional<BigInt>& bound = std::nullopt);

/// The big-M constant used by build_model: one more than the number of words
/// of length at most 2n-2.
BigInt big_m_constant(unsigned n, std::size_t sigma);

/// Mechanical satisfying assignment for a concrete n-state DFA with initial
/// state 0 (counting variables tight). This is the constructive half of the
/// encoding's correctness and doubles as a test oracle.
std::map<std::string, BigInt> assignment_from_dfa(const Sample& sample, unsigned n,
                                                  const Dfa& dfa);

/// Verifies the solution against every bound and constraint of the model
/// (solvers are untrusted), then reads off the DFA: delta(p, a) = q iff
/// t_p_a_q = 1, F = { q : f_q = 1 }. Throws SolverProtocolError naming the
/// first violated constraint on bad input.
Dfa decode_solution(const IlpModel& model, const IlpSolution& sol, const Sample& sample,
                    unsigned n);

} // namespace dfamin
