#pragma once

#include <functional>
#include <string>

#include "dfamin/dfa.hpp"
#include "dfamin/ilp_model.hpp"
#include "dfamin/sample.hpp"

namespace dfamin {

/// Anything that can answer an integer program. The external-process solver
/// below is the production implementation; tests may inject their own.
using SolverFn = std::function<IlpSolution(const IlpModel&)>;

/// Runs `command` with {lp} and {sol} replaced by fresh temp file paths, the
/// LP document already written to {lp}, and parses the solution file the
/// command leaves at {sol}:
///   STATUS <optimal|feasible|infeasible|unknown>
///   <variable name> <integer>        (absent variables default to 0)
/// Throws SolverUnavailable for an empty command and SolverProtocolError for
/// anything unparsable.
IlpSolution solve_external(const std::string& lp_document, const std::string& command);

/// SolverFn wrapping emit_lp + solve_external.
SolverFn make_external_solver(std::string command);

/// Parses a solution document (exposed for tests of the wire format).
IlpSolution parse_solution_text(const std::string& text);

struct MinimizeResult {
    Dfa dfa;
    BigInt count;      // = optimal xF
    unsigned queries;  // solver invocations
};

/// Single optimization call: minimize xF over build_model(sample, n).
MinimizeResult solve_min(const Sample& sample, unsigned n, const SolverFn& solver);

/// Proposition-2 style search: bisects k over [0, |Sigma^{<=2n-2}|] using
/// pure feasibility queries (bounded models with the objective dropped) and
/// returns a DFA whose count is the minimum over Rec(P, n). Uses at most
/// ceil(log2(max k + 1)) + 1 queries.
MinimizeResult binary_search_min(const Sample& sample, unsigned n, const SolverFn& solver);

} // namespace dfamin
