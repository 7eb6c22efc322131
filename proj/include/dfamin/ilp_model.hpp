#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dfamin/bigint.hpp"

namespace dfamin {

enum class VarKind { Binary, Integer };
enum class Relation { LessEq, Equal, GreaterEq };

struct IlpVariable {
    std::string name;
    VarKind kind;
    BigInt lower;
    BigInt upper;
};

struct IlpTerm {
    BigInt coeff;
    std::size_t var; // index into IlpModel::variables
};

struct IlpConstraint {
    std::string name;
    std::vector<IlpTerm> terms;
    Relation relation;
    BigInt rhs;
};

enum class SolveStatus { Optimal, Feasible, Infeasible, Unknown };

struct IlpSolution {
    SolveStatus status = SolveStatus::Unknown;
    std::map<std::string, BigInt> assignment; // absent variables default to 0
    BigInt objective_value;

    BigInt value(const std::string& name) const {
        auto it = assignment.find(name);
        return it == assignment.end() ? BigInt(0) : it->second;
    }
};

/// Solver-agnostic integer program. Variable and constraint names are unique
/// and stable; the objective is always a minimization.
class IlpModel {
public:
    std::size_t add_variable(std::string name, VarKind kind, BigInt lower, BigInt upper);
    void add_constraint(std::string name, std::vector<IlpTerm> terms, Relation relation,
                        BigInt rhs);
    void set_objective(std::vector<IlpTerm> terms) { objective_ = std::move(terms); }

    const std::vector<IlpVariable>& variables() const { return variables_; }
    const std::vector<IlpConstraint>& constraints() const { return constraints_; }
    const std::vector<IlpTerm>& objective() const { return objective_; }

    std::optional<std::size_t> find_variable(const std::string& name) const;
    const IlpVariable& variable(std::size_t idx) const { return variables_[idx]; }

    /// Name of the first violated bound or constraint, or nullopt if the
    /// assignment (absent names read as 0) satisfies the whole model.
    std::optional<std::string> first_violation(
        const std::map<std::string, BigInt>& assignment) const;

    BigInt objective_value(const std::map<std::string, BigInt>& assignment) const;

private:
    std::vector<IlpVariable> variables_;
    std::vector<IlpConstraint> constraints_;
    std::vector<IlpTerm> objective_;
    std::map<std::string, std::size_t> index_;
};

} // namespace dfamin
