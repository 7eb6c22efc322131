#include "dfamin/lp_format.hpp"

namespace dfamin {

namespace {

void append_terms(std::string& out, const IlpModel& model, const std::vector<IlpTerm>& terms) {
    bool first = true;
    for (const IlpTerm& t : terms) {
        const BigInt& c = t.coeff;
        if (first) {
            if (c < 0) out += "- ";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        BigInt mag = boost::multiprecision::abs(c);
        if (mag != 1) {
            out += mag.str();
            out += ' ';
        }
        out += model.variable(t.var).name;
        first = false;
    }
}

} // namespace

std::string emit_lp(const IlpModel& model) {
    std::string out;
    out += "Minimize\n obj:";
    if (!model.objective().empty()) {
        out += ' ';
        append_terms(out, model, model.objective());
    }
    out += "\nSubject To\n";
    for (const IlpConstraint& c : model.constraints()) {
        out += ' ';
        out += c.name;
        out += ": ";
        append_terms(out, model, c.terms);
        switch (c.relation) {
            case Relation::LessEq: out += " <= "; break;
            case Relation::Equal: out += " = "; break;
            case Relation::GreaterEq: out += " >= "; break;
        }
        out += c.rhs.str();
        out += '\n';
    }
    out += "Bounds\n";
    for (const IlpVariable& v : model.variables()) {
        if (v.kind == VarKind::Binary) continue;
        out += ' ' + v.lower.str() + " <= " + v.name + " <= " + v.upper.str() + '\n';
    }
    bool any_binary = false, any_integer = false;
    for (const IlpVariable& v : model.variables()) {
        any_binary |= v.kind == VarKind::Binary;
        any_integer |= v.kind == VarKind::Integer;
    }
    if (any_binary) {
        out += "Binary\n";
        for (const IlpVariable& v : model.variables())
            if (v.kind == VarKind::Binary) out += ' ' + v.name + '\n';
    }
    if (any_integer) {
        out += "General\n";
        for (const IlpVariable& v : model.variables())
            if (v.kind == VarKind::Integer) out += ' ' + v.name + '\n';
    }
    out += "End\n";
    return out;
}

} // namespace dfamin
