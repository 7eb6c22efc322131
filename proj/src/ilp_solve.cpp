#include "dfamin/ilp_solve.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dfamin/counting.hpp"
#include "dfamin/errors.hpp"
#include "dfamin/ilp_encode.hpp"
#include "dfamin/lp_format.hpp"

namespace dfamin {

namespace fs = std::filesystem;

namespace {

std::string substitute(std::string text, const std::string& key, const std::string& value) {
    for (std::size_t pos = 0; (pos = text.find(key, pos)) != std::string::npos;
         pos += value.size())
        text.replace(pos, key.size(), value);
    return text;
}

struct TempDir {
    fs::path path;
    TempDir() {
        std::string tmpl = (fs::temp_directory_path() / "dfamin.XXXXXX").string();
        if (!mkdtemp(tmpl.data())) throw std::runtime_error("cannot create temp directory");
        path = tmpl;
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

} // namespace

IlpSolution parse_solution_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw SolverProtocolError("empty solution document");
    std::istringstream head(line);
    std::string tag, status;
    head >> tag >> status;
    if (tag != "STATUS") throw SolverProtocolError("solution must start with a STATUS line");
    IlpSolution sol;
    if (status == "optimal")
        sol.status = SolveStatus::Optimal;
    else if (status == "feasible")
        sol.status = SolveStatus::Feasible;
    else if (status == "infeasible")
        sol.status = SolveStatus::Infeasible;
    else if (status == "unknown")
        sol.status = SolveStatus::Unknown;
    else
        throw SolverProtocolError("unrecognized solver status: " + status);

    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string name, value;
        if (!(row >> name >> value))
            throw SolverProtocolError("bad solution row at line " + std::to_string(lineno));
        try {
            sol.assignment[name] = BigInt(value); // integers only; anything else throws
        } catch (const std::exception&) {
            throw SolverProtocolError("non-integer value for " + name + ": " + value);
        }
    }
    return sol;
}

IlpSolution solve_external(const std::string& lp_document, const std::string& command) {
    if (command.empty()) throw SolverUnavailable("no solver command configured");
    if (command.find("{lp}") == std::string::npos || command.find("{sol}") == std::string::npos)
        throw std::invalid_argument("solver command must contain {lp} and {sol} placeholders");

    TempDir dir;
    const fs::path lp_path = dir.path / "model.lp";
    const fs::path sol_path = dir.path / "model.sol";
    {
        std::ofstream out(lp_path);
        out << lp_document;
        if (!out) throw std::runtime_error("cannot write " + lp_path.string());
    }

    std::string cmd = substitute(substitute(command, "{lp}", lp_path.string()), "{sol}",
                                 sol_path.string());
    int rc = std::system(cmd.c_str());

    std::ifstream in(sol_path);
    if (!in) {
        if (rc != 0)
            throw SolverProtocolError("solver command failed with exit status " +
                                      std::to_string(rc));
        throw SolverProtocolError("solver produced no solution file");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_solution_text(text.str());
}

SolverFn make_external_solver(std::string command) {
    return [command = std::move(command)](const IlpModel& model) {
        return solve_external(emit_lp(model), command);
    };
}

namespace {

IlpSolution run_solver(const SolverFn& solver, const IlpModel& model, unsigned& queries) {
    ++queries;
    IlpSolution sol = solver(model);
    if (sol.status == SolveStatus::Unknown)
        throw SolverProtocolError("solver returned unknown status");
    return sol;
}

} // namespace

MinimizeResult solve_min(const Sample& sample, unsigned n, const SolverFn& solver) {
    unsigned queries = 0;
    IlpModel model = build_model(sample, n);
    IlpSolution sol = run_solver(solver, model, queries);
    if (sol.status == SolveStatus::Infeasible)
        throw SolverProtocolError(
            "solver reported infeasible, but the trivial accepting DFA always satisfies "
            "the model");
    Dfa dfa = decode_solution(model, sol, sample, n);
    // xF can only over-count; the recount is exact and equals xF at optimum.
    BigInt count = count_accepted_up_to(dfa, 2 * n - 2);
    return MinimizeResult{std::move(dfa), std::move(count), queries};
}

MinimizeResult binary_search_min(const Sample& sample, unsigned n, const SolverFn& solver) {
    unsigned queries = 0;
    BigInt lo = 0;
    BigInt hi = words_up_to(sample.sigma(), 2 * n - 2); // trivial DFA count: always feasible

    std::optional<IlpModel> best_model;
    std::optional<IlpSolution> best_sol;
    auto query = [&](const BigInt& k) -> bool {
        IlpModel model = build_model(sample, n, k);
        IlpSolution sol = run_solver(solver, model, queries);
        if (sol.status == SolveStatus::Infeasible) return false;
        best_model = std::move(model);
        best_sol = std::move(sol);
        return true;
    };

    while (lo < hi) {
        BigInt mid = (lo + hi) / 2;
        if (query(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    // Happens when every probed bound was infeasible (the minimum sits at the
    // upper end of the interval): fetch a witness at the final bound.
    if (!best_sol && !query(lo))
        throw SolverProtocolError("solver reported infeasible at the count ceiling");
    // The cached solution certifies feasibility at the final bound lo, which
    // is the minimum; its decoded DFA therefore attains it.
    Dfa dfa = decode_solution(*best_model, *best_sol, sample, n);
    BigInt count = count_accepted_up_to(dfa, 2 * n - 2);
    return MinimizeResult{std::move(dfa), std::move(count), queries};
}

} // namespace dfamin
