#include <doctest.h>

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "dfamin/counting.hpp"
#include "dfamin/errors.hpp"
#include "dfamin/ilp_solve.hpp"
#include "dfamin/lp_format.hpp"
#include "support.hpp"

using namespace dfamin;
using namespace testsupport;

namespace {

// Closed-form family sizes summed straight from their index-set definitions.
std::size_t census_variables(unsigned n, std::size_t sigma, std::size_t p) {
    std::size_t total = 0;
    total += n * n * sigma;            // transitions
    total += n;                        // final flags
    total += p * n;                    // word variables
    total += n * (2 * n - 1);          // counts, k in [0, 2n-2]
    total += n * n * sigma * (2 * n - 2); // products, k in [0, 2n-3]
    total += n * (2 * n - 1) + 1;      // final counts + xF
    return total;
}

std::size_t census_constraints(unsigned n, std::size_t sigma, std::size_t p,
                               std::size_t words) {
    std::size_t total = 0;
    total += n * sigma;                    // one target per cell
    total += 1 + p + (p - 1) * n * n;      // run: init, per prefix, per edge pair
    total += words * n;                    // acceptance
    total += n;                            // counts at length 0
    total += 2 * (n * n * sigma * (2 * n - 2)); // step big-M pairs
    total += n * (2 * n - 2);              // count recurrences
    total += 2 * (n * (2 * n - 1));        // final big-M pairs
    total += 1;                            // xF sum
    return total;
}

// Independent LP reader: section split, one constraint per line, terms
// reconstructed as (coefficient, name) lists.
struct ParsedConstraint {
    std::vector<std::pair<BigInt, std::string>> terms;
    std::string relation;
    BigInt rhs;
};

struct ParsedLp {
    std::vector<std::string> objective_names;
    std::map<std::string, ParsedConstraint> constraints;
    std::set<std::string> binaries, generals;
    std::map<std::string, std::pair<BigInt, BigInt>> bounds;
};

std::vector<std::pair<BigInt, std::string>> parse_terms(const std::string& expr) {
    std::vector<std::pair<BigInt, std::string>> terms;
    std::istringstream in(expr);
    std::string tok;
    BigInt sign = 1;
    std::optional<BigInt> coeff;
    while (in >> tok) {
        if (tok == "+") {
            sign = 1;
        } else if (tok == "-") {
            sign = -1;
        } else if (isdigit(static_cast<unsigned char>(tok[0]))) {
            coeff = BigInt(tok);
        } else {
            terms.emplace_back(sign * coeff.value_or(1), tok);
            sign = 1;
            coeff.reset();
        }
    }
    REQUIRE(!coeff); // a dangling coefficient would mean a malformed line
    return terms;
}

ParsedLp reparse_lp(const std::string& text) {
    ParsedLp out;
    std::istringstream in(text);
    std::string line, section;
    while (std::getline(in, line)) {
        if (line == "Minimize" || line == "Subject To" || line == "Bounds" ||
            line == "Binary" || line == "General" || line == "End") {
            section = line;
            continue;
        }
        REQUIRE(!line.empty());
        REQUIRE(line[0] == ' ');
        std::string body = line.substr(1);
        if (section == "Minimize") {
            auto colon = body.find(':');
            REQUIRE(colon != std::string::npos);
            for (const auto& [coeff, name] : parse_terms(body.substr(colon + 1)))
                out.objective_names.push_back(name);
        } else if (section == "Subject To") {
            auto colon = body.find(':');
            REQUIRE(colon != std::string::npos);
            std::string name = body.substr(0, colon);
            REQUIRE(!out.constraints.count(name));
            std::string rest = body.substr(colon + 1);
            std::size_t rel_pos = rest.find("<=");
            std::string rel = "<=";
            if (rel_pos == std::string::npos) {
                rel_pos = rest.find(">=");
                rel = ">=";
            }
            if (rel_pos == std::string::npos) {
                rel_pos = rest.find('=');
                rel = "=";
            }
            REQUIRE(rel_pos != std::string::npos);
            ParsedConstraint parsed;
            parsed.terms = parse_terms(rest.substr(0, rel_pos));
            parsed.relation = rel;
            std::string rhs = rest.substr(rel_pos + rel.size());
            rhs.erase(0, rhs.find_first_not_of(' '));
            parsed.rhs = BigInt(rhs);
            out.constraints.emplace(std::move(name), std::move(parsed));
        } else if (section == "Bounds") {
            std::istringstream row(body);
            std::string lb, le1, name, le2, ub;
            REQUIRE((row >> lb >> le1 >> name >> le2 >> ub));
            REQUIRE(le1 == "<=");
            REQUIRE(le2 == "<=");
            out.bounds.emplace(name, std::make_pair(BigInt(lb), BigInt(ub)));
        } else if (section == "Binary") {
            out.binaries.insert(body);
        } else if (section == "General") {
            out.generals.insert(body);
        }
    }
    return out;
}

// Structural identity between a model and its re-parsed LP rendering.
void check_lp_round_trip(const IlpModel& model) {
    ParsedLp parsed = reparse_lp(emit_lp(model));
    REQUIRE(parsed.constraints.size() == model.constraints().size());
    for (const IlpConstraint& c : model.constraints()) {
        REQUIRE(parsed.constraints.count(c.name) == 1);
        const ParsedConstraint& p = parsed.constraints.at(c.name);
        REQUIRE(p.terms.size() == c.terms.size());
        for (std::size_t i = 0; i < c.terms.size(); ++i) {
            CHECK(p.terms[i].first == c.terms[i].coeff);
            CHECK(p.terms[i].second == model.variable(c.terms[i].var).name);
        }
        const char* rel = c.relation == Relation::LessEq      ? "<="
                          : c.relation == Relation::GreaterEq ? ">="
                                                              : "=";
        CHECK(p.relation == rel);
        CHECK(p.rhs == c.rhs);
    }
    for (const IlpVariable& v : model.variables()) {
        if (v.kind == VarKind::Binary) {
            CHECK(parsed.binaries.count(v.name) == 1);
        } else {
            CHECK(parsed.generals.count(v.name) == 1);
            REQUIRE(parsed.bounds.count(v.name) == 1);
            CHECK(parsed.bounds.at(v.name).first == v.lower);
            CHECK(parsed.bounds.at(v.name).second == v.upper);
        }
    }
}

} // namespace

TEST_CASE("variable census matches the closed forms, including the 43") {
    struct Case {
        unsigned n;
        std::size_t sigma;
        Sample sample;
    };
    std::vector<Case> cases;
    cases.push_back({2, 2, Sample(Alphabet::indexed(2), {{0}})});        // p = 2
    cases.push_back({1, 1, Sample(Alphabet::indexed(1), {{}})});         // p = 1
    cases.push_back({3, 2, Sample(Alphabet::indexed(2), {{0}, {0, 1}})}); // p = 3
    cases.push_back({2, 1, Sample(Alphabet::indexed(1), {{0}, {0, 0}})}); // p = 3
    for (const Case& c : cases) {
        IlpModel model = build_model(c.sample, c.n);
        CHECK(model.variables().size() ==
              census_variables(c.n, c.sigma, c.sample.prefix_count()));
        CHECK(model.constraints().size() ==
              census_constraints(c.n, c.sigma, c.sample.prefix_count(),
                                 c.sample.words().size()));
    }
    // the worked example: n=2, sigma=2, P={a}: 8+2+4+6+16+7
    IlpModel m = build_model(cases[0].sample, 2);
    CHECK(m.variables().size() == 43);
}

TEST_CASE("one-state unary model over {epsilon} is feasible with xF = 1") {
    Sample sample(Alphabet::indexed(1), {{}});
    IlpModel model = build_model(sample, 1);
    IlpSolution sol = exhaustive_model_solve(model, sample, 1);
    REQUIRE(sol.status == SolveStatus::Optimal);
    CHECK(sol.objective_value == 1);
    Dfa dfa = decode_solution(model, sol, sample, 1);
    CHECK(dfa.final() == std::set<State>{0});
}

TEST_CASE("every member of Rec(P, n) yields a satisfying tight assignment") {
    Sample sample(Alphabet::indexed(2), {{0}, {0, 1}});
    const unsigned n = 2;
    IlpModel model = build_model(sample, n);
    int members = 0;
    for (std::uint32_t bits = 0; bits < 256; ++bits) {
        std::vector<State> delta{(bits >> 0) & 1, (bits >> 1) & 1, (bits >> 2) & 1,
                                 (bits >> 3) & 1};
        for (std::uint32_t mask = 0; mask < 4; ++mask) {
            std::set<State> final;
            if (mask & 1) final.insert(0);
            if (mask & 2) final.insert(1);
            Dfa dfa(sample.alphabet(), n, 0, delta, final);
            auto x = assignment_from_dfa(sample, n, dfa);
            if (recognizes_sample(dfa, sample)) {
                ++members;
                CHECK(!model.first_violation(x));
                CHECK(x.at(varname::total) == count_accepted_up_to(dfa, 2 * n - 2));
            } else {
                // some acceptance constraint must reject it
                auto violated = model.first_violation(x);
                REQUIRE(violated);
                CHECK(violated->substr(0, 4) == "acc_");
            }
        }
    }
    CHECK(members > 0);
}

TEST_CASE("model optimum equals the oracle minimum") {
    Sample sample(Alphabet::indexed(2), {{0}});
    IlpModel model = build_model(sample, 2);
    IlpSolution sol = exhaustive_model_solve(model, sample, 2);
    REQUIRE(sol.status == SolveStatus::Optimal);
    CHECK(sol.objective_value == enumerate_min_count(sample, 2).min_count);
    Dfa dfa = decode_solution(model, sol, sample, 2);
    CHECK(count_accepted_up_to(dfa, 2) == sol.value(varname::total));
}

TEST_CASE("decode rejects corrupted assignments") {
    Sample sample(Alphabet::indexed(2), {{0}});
    const unsigned n = 2;
    IlpModel model = build_model(sample, n);
    IlpSolution sol = exhaustive_model_solve(model, sample, n);
    REQUIRE(sol.status == SolveStatus::Optimal);

    IlpSolution broken = sol;
    broken.assignment[varname::transition(0, 0, 0)] = 1;
    broken.assignment[varname::transition(0, 0, 1)] = 1; // two targets for one cell
    try {
        decode_solution(model, broken, sample, n);
        FAIL("expected rejection");
    } catch (const SolverProtocolError& e) {
        CHECK(std::string(e.what()).find("dfa_0_0") != std::string::npos);
    }

    IlpSolution infeasible = sol;
    infeasible.status = SolveStatus::Infeasible;
    CHECK_THROWS_AS(decode_solution(model, infeasible, sample, n), SolverProtocolError);
}

TEST_CASE("hand-built trivial-acceptor assignment decodes back, xF = ceiling") {
    Sample sample(Alphabet::indexed(2), {{0}});
    IlpModel model = build_model(sample, 1);
    Dfa trivial = Dfa::trivial_accepting(sample.alphabet());
    auto x = assignment_from_dfa(sample, 1, trivial);
    CHECK(!model.first_violation(x));
    CHECK(x.at(varname::total) == words_up_to(2, 0)); // n=1: horizon 0
    IlpSolution sol;
    sol.status = SolveStatus::Feasible;
    sol.assignment = x;
    Dfa decoded = decode_solution(model, sol, sample, 1);
    CHECK(decoded == trivial);
}

TEST_CASE("LP text: deterministic and structurally identical after re-parsing") {
    Sample sample(Alphabet::indexed(2), {{0}});
    IlpModel model = build_model(sample, 2);
    std::string text = emit_lp(model);
    CHECK(text == emit_lp(model));
    CHECK(reparse_lp(text).objective_names == std::vector<std::string>{"xF"});
    check_lp_round_trip(model);

    // the smallest interesting model round-trips too
    Sample unary(Alphabet::indexed(1), {{}});
    check_lp_round_trip(build_model(unary, 1));
    check_lp_round_trip(build_model(unary, 2));
}

TEST_CASE("constraint-free model renders one objective and one General entry") {
    IlpModel model;
    std::size_t xf = model.add_variable("xF", VarKind::Integer, 0, 100);
    model.set_objective({{1, xf}});
    ParsedLp parsed = reparse_lp(emit_lp(model));
    CHECK(parsed.objective_names == std::vector<std::string>{"xF"});
    CHECK(parsed.constraints.empty());
    CHECK(parsed.generals == std::set<std::string>{"xF"});
    CHECK(parsed.binaries.empty());
}

TEST_CASE("LP with no objective still emits an objective line") {
    Sample sample(Alphabet::indexed(1), {{}});
    IlpModel model = build_model(sample, 1, BigInt(1));
    std::string text = emit_lp(model);
    CHECK(text.find("Minimize\n obj:\n") != std::string::npos);
    ParsedLp parsed = reparse_lp(text);
    CHECK(parsed.constraints.count("bound_xF") == 1);
}

TEST_CASE("solution text parsing") {
    IlpSolution sol = parse_solution_text("STATUS optimal\nxF 3\nf_0 1\n");
    CHECK(sol.status == SolveStatus::Optimal);
    CHECK(sol.value("xF") == 3);
    CHECK(sol.value("f_0") == 1);
    CHECK(sol.value("missing") == 0);
    CHECK(parse_solution_text("STATUS infeasible\n").status == SolveStatus::Infeasible);
    CHECK_THROWS_AS(parse_solution_text(""), SolverProtocolError);
    CHECK_THROWS_AS(parse_solution_text("nonsense\n"), SolverProtocolError);
    CHECK_THROWS_AS(parse_solution_text("STATUS optimal\nxF 1.5\n"), SolverProtocolError);
}

TEST_CASE("external solver plumbing with a stub command") {
    CHECK_THROWS_AS(solve_external("Minimize\n", ""), SolverUnavailable);
    CHECK_THROWS_AS(solve_external("Minimize\n", "solver-without-placeholders"),
                    std::invalid_argument);

    // stub echoes a fixed feasible-looking document
    IlpSolution sol =
        solve_external("ignored", "printf 'STATUS feasible\\nxF 7\\n' > {sol}; cat {lp} > /dev/null");
    CHECK(sol.status == SolveStatus::Feasible);
    CHECK(sol.value("xF") == 7);

    CHECK_THROWS_AS(solve_external("x", "true # {lp} {sol}"), SolverProtocolError);
}

TEST_CASE("binary search matches direct minimization via the exhaustive solver") {
    std::vector<Sample> samples;
    samples.push_back(Sample(Alphabet::indexed(2), {{0}}));
    samples.push_back(Sample(Alphabet::indexed(2), {{0}, {1, 1}}));
    samples.push_back(Sample(Alphabet::indexed(2), {}));
    samples.push_back(Sample(Alphabet::indexed(1), {{0}}));
    for (const Sample& sample : samples) {
        const unsigned n = 2;
        SolverFn solver = make_exhaustive_solver(sample, n);
        MinimizeResult direct = solve_min(sample, n, solver);
        MinimizeResult bisect = binary_search_min(sample, n, solver);
        CHECK(direct.count == bisect.count);
        CHECK(bisect.count == enumerate_min_count(sample, n).min_count);
        CHECK(recognizes_sample(bisect.dfa, sample));
        // ceil(log2(max k + 1)) + 1
        double bound = std::ceil(std::log2(words_up_to(sample.sigma(), 2 * n - 2)
                                               .convert_to<double>() +
                                           1)) +
                       1;
        CHECK(bisect.queries <= static_cast<unsigned>(bound));
    }
}

TEST_CASE("binary search on a forced instance needs few queries") {
    // P = all of Sigma^{<=1} with n = 1: the minimum is the ceiling itself.
    Sample sample(Alphabet::indexed(2), {{}, {0}, {1}});
    SolverFn solver = make_exhaustive_solver(sample, 1);
    MinimizeResult r = binary_search_min(sample, 1, solver);
    CHECK(r.count == 1); // horizon 0: epsilon only
    CHECK(r.queries <= 2);
}
