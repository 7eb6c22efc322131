#include "dfamin/ilp_model.hpp"

#include <stdexcept>

namespace dfamin {

std::size_t IlpModel::add_variable(std::string name, VarKind kind, BigInt lower, BigInt upper) {
    if (index_.count(name)) throw std::logic_error("duplicate variable name: " + name);
    if (kind == VarKind::Binary && (lower != 0 || upper != 1))
        throw std::logic_error("binary variable must have bounds (0, 1): " + name);
    index_.emplace(name, variables_.size());
    variables_.push_back(IlpVariable{std::move(name), kind, std::move(lower), std::move(upper)});
    return variables_.size() - 1;
}

void IlpModel::add_constraint(std::string name, std::vector<IlpTerm> terms, Relation relation,
                              BigInt rhs) {
    for (const IlpTerm& t : terms)
        if (t.var >= variables_.size())
            throw std::logic_error("constraint " + name + " references unknown variable");
    constraints_.push_back(
        IlpConstraint{std::move(name), std::move(terms), relation, std::move(rhs)});
}

std::optional<std::size_t> IlpModel::find_variable(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

namespace {

BigInt lookup(const std::map<std::string, BigInt>& assignment, const std::string& name) {
    auto it = assignment.find(name);
    return it == assignment.end() ? BigInt(0) : it->second;
}

} // namespace

std::optional<std::string> IlpModel::first_violation(
    const std::map<std::string, BigInt>& assignment) const {
    for (const IlpVariable& v : variables_) {
        BigInt value = lookup(assignment, v.name);
        if (value < v.lower || value > v.upper) return "bounds:" + v.name;
    }
    for (const IlpConstraint& c : constraints_) {
        BigInt lhs = 0;
        for (const IlpTerm& t : c.terms) lhs += t.coeff * lookup(assignment, variables_[t.var].name);
        bool ok = (c.relation == Relation::LessEq)      ? lhs <= c.rhs
                  : (c.relation == Relation::GreaterEq) ? lhs >= c.rhs
                                                        : lhs == c.rhs;
        if (!ok) return c.name;
    }
    return std::nullopt;
}

BigInt IlpModel::objective_value(const std::map<std::string, BigInt>& assignment) const {
    BigInt total = 0;
    for (const IlpTerm& t : objective_)
        total += t.coeff * lookup(assignment, variables_[t.var].name);
    return total;
}

} // namespace dfamin
