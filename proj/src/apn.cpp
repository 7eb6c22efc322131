#include "dfamin/apn.hpp"

#include <sstream>
#include <stdexcept>

#include "dfamin/errors.hpp"

namespace dfamin {

std::pair<const std::set<unsigned>*, bool> ApnSatInstance::clause(unsigned j) const {
    if (j == 0 || j > s()) throw std::out_of_range("clause index out of range");
    if (j <= positive_clauses.size()) return {&positive_clauses[j - 1], true};
    return {&negative_clauses[j - 1 - positive_clauses.size()], false};
}

void ApnSatInstance::validate() const {
    auto check = [this](const std::set<unsigned>& clause) {
        if (clause.empty()) throw std::invalid_argument("empty clause");
        for (unsigned v : clause)
            if (v == 0 || v > r) throw std::invalid_argument("clause variable out of range");
    };
    for (const auto& c : positive_clauses) check(c);
    for (const auto& c : negative_clauses) check(c);
}

bool satisfies(const ApnSatInstance& inst, const Valuation& nu) {
    for (unsigned j = 1; j <= inst.s(); ++j) {
        auto [clause, positive] = inst.clause(j);
        bool sat = false;
        for (unsigned v : *clause)
            if (nu.of(v) == positive) {
                sat = true;
                break;
            }
        if (!sat) return false;
    }
    return true;
}

std::optional<Valuation> find_satisfying_valuation(const ApnSatInstance& inst) {
    if (inst.r > 20)
        throw GuardError("valuation search is guarded to instances with at most 20 variables");
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << inst.r); ++bits) {
        Valuation nu{std::vector<bool>(inst.r + 1, false)};
        for (unsigned v = 1; v <= inst.r; ++v) nu.value[v] = (bits >> (v - 1)) & 1;
        if (satisfies(inst, nu)) return nu;
    }
    return std::nullopt;
}

ApnSatInstance pad_variables(ApnSatInstance inst, unsigned min_vars) {
    if (inst.r < min_vars) inst.r = min_vars;
    return inst;
}

ApnSatInstance parse_apn(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    ApnSatInstance inst;
    unsigned declared_s = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream row(line);
        std::string head;
        if (!(row >> head)) continue; // blank line
        if (head == "c") continue;    // comment
        if (!header_seen) {
            std::string kind;
            if (head != "p" || !(row >> kind >> inst.r >> declared_s) || kind != "apn")
                throw ParseError("expected header 'p apn <r> <s>'", lineno);
            header_seen = true;
            continue;
        }
        if (head != "+" && head != "-")
            throw ParseError("clause line must start with '+' or '-'", lineno);
        std::set<unsigned> clause;
        unsigned v;
        while (row >> v) clause.insert(v);
        if (!row.eof()) throw ParseError("bad variable index", lineno);
        if (clause.empty()) throw ParseError("empty clause", lineno);
        for (unsigned x : clause)
            if (x == 0 || x > inst.r) throw ParseError("variable index out of range", lineno);
        (head == "+" ? inst.positive_clauses : inst.negative_clauses).push_back(std::move(clause));
    }
    if (!header_seen) throw ParseError("missing 'p apn' header");
    if (inst.s() != declared_s)
        throw ParseError("header declares " + std::to_string(declared_s) + " clauses, found " +
                         std::to_string(inst.s()));
    inst.validate();
    return inst;
}

std::string format_apn(const ApnSatInstance& inst) {
    std::ostringstream out;
    out << "p apn " << inst.r << ' ' << inst.s() << '\n';
    for (unsigned j = 1; j <= inst.s(); ++j) {
        auto [clause, positive] = inst.clause(j);
        out << (positive ? '+' : '-');
        for (unsigned v : *clause) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

Valuation parse_valuation(const std::string& text, unsigned r) {
    Valuation nu{std::vector<bool>(r + 1, false)};
    std::vector<bool> seen(r + 1, false);
    std::istringstream in(text);
    std::string item;
    while (in >> item) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("valuation item needs '=': " + item);
        unsigned var = 0;
        try {
            var = static_cast<unsigned>(std::stoul(item.substr(0, eq)));
        } catch (const std::exception&) {
            throw ParseError("bad variable in valuation: " + item);
        }
        if (var == 0 || var > r) throw ParseError("valuation variable out of range: " + item);
        std::string val = item.substr(eq + 1);
        if (val != "T" && val != "F") throw ParseError("valuation value must be T or F: " + item);
        nu.value[var] = val == "T";
        seen[var] = true;
    }
    for (unsigned v = 1; v <= r; ++v)
        if (!seen[v]) throw ParseError("valuation missing variable " + std::to_string(v));
    return nu;
}

} // namespace dfamin
