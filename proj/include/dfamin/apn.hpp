#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dfamin {

/// Satisfiability instance in which every clause is all-positive or
/// all-negative. Variables are 1-based indices 1..r. Clauses carry a global
/// index 1..s: positives first (in input order), then negatives.
struct ApnSatInstance {
    unsigned r = 0;
    std::vector<std::set<unsigned>> positive_clauses;
    std::vector<std::set<unsigned>> negative_clauses;

    unsigned s() const {
        return static_cast<unsigned>(positive_clauses.size() + negative_clauses.size());
    }
    /// Clause by global index j in 1..s, with its polarity.
    std::pair<const std::set<unsigned>*, bool> clause(unsigned j) const;

    void validate() const;
};

/// Total assignment; index 0 is unused.
struct Valuation {
    std::vector<bool> value; // size r + 1

    bool of(unsigned var) const { return value.at(var); }
};

bool satisfies(const ApnSatInstance& inst, const Valuation& nu);

/// Exhaustive search for a satisfying valuation; guarded to r <= 20.
std::optional<Valuation> find_satisfying_valuation(const ApnSatInstance& inst);

/// Same instance with dummy variables (appearing in no clause) appended
/// until at least min_vars variables exist.
ApnSatInstance pad_variables(ApnSatInstance inst, unsigned min_vars);

/// Text format: line 1 "p apn <r> <s>", then one clause per line,
/// "+ i1 i2 ..." or "- i1 i2 ..." with 1-based variable indices.
ApnSatInstance parse_apn(const std::string& text);
std::string format_apn(const ApnSatInstance& inst);

/// Parses "1=T 2=F ..." into a total valuation for the instance.
Valuation parse_valuation(const std::string& text, unsigned r);

} // namespace dfamin
