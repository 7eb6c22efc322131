#include "dfamin/ilp_encode.hpp"

#include <stdexcept>

#include "dfamin/counting.hpp"
#include "dfamin/errors.hpp"

namespace dfamin {

namespace varname {

std::string transition(State p, Symbol a, State q) {
    return "t_" + std::to_string(p) + "_" + std::to_string(a) + "_" + std::to_string(q);
}
std::string final_state(State q) { return "f_" + std::to_string(q); }
std::string word(std::size_t prefix_id, State q) {
    return "w_" + std::to_string(prefix_id) + "_" + std::to_string(q);
}
std::string count(State q, unsigned k) {
    return "c_" + std::to_string(q) + "_" + std::to_string(k);
}
std::string count_product(State p, Symbol a, State q, unsigned k) {
    return "cp_" + std::to_string(p) + "_" + std::to_string(a) + "_" + std::to_string(q) + "_" +
           std::to_string(k);
}
std::string final_count(State q, unsigned k) {
    return "cf_" + std::to_string(q) + "_" + std::to_string(k);
}

} // namespace varname

BigInt big_m_constant(unsigned n, std::size_t sigma) {
    return words_up_to(sigma, 2 * n - 2) + 1;
}

IlpModel build_model(const Sample& sample, unsigned n, const std::optional<BigInt>& bound) {
    if (n == 0) throw std::invalid_argument("state bound must be >= 1");
    const std::size_t sigma = sample.sigma();
    const unsigned kmax = 2 * n - 2;       // counting lengths 0..2n-2
    const PrefixTrie& trie = sample.trie();
    const BigInt big_m = big_m_constant(n, sigma);

    IlpModel model;
    auto var = [&](const std::string& name) { return *model.find_variable(name); };

    // Variables, family by family.
    for (State p = 0; p < n; ++p)
        for (Symbol a = 0; a < sigma; ++a)
            for (State q = 0; q < n; ++q)
                model.add_variable(varname::transition(p, a, q), VarKind::Binary, 0, 1);
    for (State q = 0; q < n; ++q)
        model.add_variable(varname::final_state(q), VarKind::Binary, 0, 1);
    for (std::size_t u = 0; u < trie.node_count(); ++u)
        for (State q = 0; q < n; ++q)
            model.add_variable(varname::word(u, q), VarKind::Binary, 0, 1);
    for (State q = 0; q < n; ++q)
        for (unsigned k = 0; k <= kmax; ++k)
            model.add_variable(varname::count(q, k), VarKind::Integer, 0,
                               boost::multiprecision::pow(BigInt(sigma), k));
    if (kmax >= 1)
        for (State p = 0; p < n; ++p)
            for (Symbol a = 0; a < sigma; ++a)
                for (State q = 0; q < n; ++q)
                    for (unsigned k = 0; k <= kmax - 1; ++k)
                        model.add_variable(varname::count_product(p, a, q, k), VarKind::Integer,
                                           0, boost::multiprecision::pow(BigInt(sigma), k));
    for (State q = 0; q < n; ++q)
        for (unsigned k = 0; k <= kmax; ++k)
            model.add_variable(varname::final_count(q, k), VarKind::Integer, 0,
                               boost::multiprecision::pow(BigInt(sigma), k));
    model.add_variable(varname::total, VarKind::Integer, 0, words_up_to(sigma, kmax));

    // delta is a function: exactly one target per (p, a).
    for (State p = 0; p < n; ++p)
        for (Symbol a = 0; a < sigma; ++a) {
            std::vector<IlpTerm> terms;
            for (State q = 0; q < n; ++q) terms.push_back({1, var(varname::transition(p, a, q))});
            model.add_constraint("dfa_" + std::to_string(p) + "_" + std::to_string(a),
                                 std::move(terms), Relation::Equal, 1);
        }

    // Runs over the prefix trie: the run starts at state 0, visits exactly
    // one state per prefix, and follows the chosen transitions.
    model.add_constraint("run_init", {{1, var(varname::word(0, 0))}}, Relation::Equal, 1);
    for (std::size_t u = 0; u < trie.node_count(); ++u) {
        std::vector<IlpTerm> terms;
        for (State q = 0; q < n; ++q) terms.push_back({1, var(varname::word(u, q))});
        model.add_constraint("run_" + std::to_string(u), std::move(terms), Relation::Equal, 1);
    }
    for (std::size_t v = 1; v < trie.node_count(); ++v) {
        const std::size_t u = trie.parent(v);
        const Symbol a = trie.symbol_from_parent(v);
        for (State p = 0; p < n; ++p)
            for (State q = 0; q < n; ++q) {
                // w_{u,p} + t_{p,a,q} <= 1 + w_{v,q}
                model.add_constraint(
                    "step_" + std::to_string(v) + "_" + std::to_string(p) + "_" +
                        std::to_string(q),
                    {{1, var(varname::word(u, p))},
                     {1, var(varname::transition(p, a, q))},
                     {-1, var(varname::word(v, q))}},
                    Relation::LessEq, 1);
            }
    }

    // Words of the sample end in final states.
    for (std::size_t u = 0; u < trie.node_count(); ++u) {
        if (!trie.is_word(u)) continue;
        for (State q = 0; q < n; ++q)
            model.add_constraint(
                "acc_" + std::to_string(u) + "_" + std::to_string(q),
                {{1, var(varname::word(u, q))}, {-1, var(varname::final_state(q))}},
                Relation::LessEq, 0);
    }

    // Counting recurrence, big-M linearized.
    model.add_constraint("cnt0_0", {{1, var(varname::count(0, 0))}}, Relation::Equal, 1);
    for (State q = 1; q < n; ++q)
        model.add_constraint("cnt0_" + std::to_string(q), {{1, var(varname::count(q, 0))}},
                             Relation::Equal, 0);
    if (kmax >= 1) {
        for (State p = 0; p < n; ++p)
            for (Symbol a = 0; a < sigma; ++a)
                for (State q = 0; q < n; ++q)
                    for (unsigned k = 0; k <= kmax - 1; ++k) {
                        const std::string suffix = std::to_string(p) + "_" + std::to_string(a) +
                                                   "_" + std::to_string(q) + "_" +
                                                   std::to_string(k);
                        // c_{p,k} <= cp_{p,a,q,k} + (1 - t_{p,a,q}) * M
                        model.add_constraint("bms1_" + suffix,
                                             {{1, var(varname::count(p, k))},
                                              {-1, var(varname::count_product(p, a, q, k))},
                                              {big_m, var(varname::transition(p, a, q))}},
                                             Relation::LessEq, big_m);
                        // cp_{p,a,q,k} <= t_{p,a,q} * M
                        model.add_constraint("bms2_" + suffix,
                                             {{1, var(varname::count_product(p, a, q, k))},
                                              {-big_m, var(varname::transition(p, a, q))}},
                                             Relation::LessEq, 0);
                    }
        for (State q = 0; q < n; ++q)
            for (unsigned k = 1; k <= kmax; ++k) {
                std::vector<IlpTerm> terms{{1, var(varname::count(q, k))}};
                for (State p = 0; p < n; ++p)
                    for (Symbol a = 0; a < sigma; ++a)
                        terms.push_back({-1, var(varname::count_product(p, a, q, k - 1))});
                model.add_constraint("cnt_" + std::to_string(q) + "_" + std::to_string(k),
                                     std::move(terms), Relation::Equal, 0);
            }
    }
    for (State q = 0; q < n; ++q)
        for (unsigned k = 0; k <= kmax; ++k) {
            const std::string suffix = std::to_string(q) + "_" + std::to_string(k);
            model.add_constraint("bmf1_" + suffix,
                                 {{1, var(varname::count(q, k))},
                                  {-1, var(varname::final_count(q, k))},
                                  {big_m, var(varname::final_state(q))}},
                                 Relation::LessEq, big_m);
            model.add_constraint("bmf2_" + suffix,
                                 {{1, var(varname::final_count(q, k))},
                                  {-big_m, var(varname::final_state(q))}},
                                 Relation::LessEq, 0);
        }
    {
        std::vector<IlpTerm> terms{{1, var(varname::total)}};
        for (State q = 0; q < n; ++q)
            for (unsigned k = 0; k <= kmax; ++k)
                terms.push_back({-1, var(varname::final_count(q, k))});
        model.add_constraint("cntF", std::move(terms), Relation::Equal, 0);
    }

    if (bound) {
        model.add_constraint("bound_xF", {{1, var(varname::total)}}, Relation::LessEq, *bound);
    } else {
        model.set_objective({{1, var(varname::total)}});
    }
    return model;
}

std::map<std::string, BigInt> assignment_from_dfa(const Sample& sample, unsigned n,
                                                  const Dfa& dfa) {
    if (dfa.init() != 0) throw std::invalid_argument("encoding fixes the initial state at 0");
    if (dfa.n_states() != n) throw std::invalid_argument("DFA state count must equal n");
    const std::size_t sigma = sample.sigma();
    const unsigned kmax = 2 * n - 2;
    std::map<std::string, BigInt> x;

    for (State p = 0; p < n; ++p)
        for (Symbol a = 0; a < sigma; ++a)
            for (State q = 0; q < n; ++q)
                x[varname::transition(p, a, q)] = dfa.next(p, a) == q ? 1 : 0;
    for (State q = 0; q < n; ++q) x[varname::final_state(q)] = dfa.is_final(q) ? 1 : 0;

    const PrefixTrie& trie = sample.trie();
    std::vector<State> at(trie.node_count());
    at[0] = 0;
    for (std::size_t u = 1; u < trie.node_count(); ++u)
        at[u] = dfa.next(at[trie.parent(u)], trie.symbol_from_parent(u));
    for (std::size_t u = 0; u < trie.node_count(); ++u)
        for (State q = 0; q < n; ++q) x[varname::word(u, q)] = at[u] == q ? 1 : 0;

    // Tight counting assignment: c_{q,k} = N(q,k) and products exact.
    std::vector<CountVector> counts{initial_counts(dfa)};
    for (unsigned k = 1; k <= kmax; ++k) counts.push_back(step_counts(dfa, counts.back()));
    BigInt total = 0;
    for (State q = 0; q < n; ++q)
        for (unsigned k = 0; k <= kmax; ++k) {
            x[varname::count(q, k)] = counts[k][q];
            BigInt cf = dfa.is_final(q) ? counts[k][q] : 0;
            x[varname::final_count(q, k)] = cf;
            total += cf;
        }
    if (kmax >= 1)
        for (State p = 0; p < n; ++p)
            for (Symbol a = 0; a < sigma; ++a)
                for (State q = 0; q < n; ++q)
                    for (unsigned k = 0; k <= kmax - 1; ++k)
                        x[varname::count_product(p, a, q, k)] =
                            dfa.next(p, a) == q ? counts[k][p] : 0;
    x[varname::total] = total;
    return x;
}

Dfa decode_solution(const IlpModel& model, const IlpSolution& sol, const Sample& sample,
                    unsigned n) {
    if (sol.status != SolveStatus::Optimal && sol.status != SolveStatus::Feasible)
        throw SolverProtocolError("cannot decode a solution with non-feasible status");
    if (auto violated = model.first_violation(sol.assignment))
        throw SolverProtocolError("solution violates " + *violated);

    const std::size_t sigma = sample.sigma();
    std::vector<State> delta(std::size_t(n) * sigma);
    for (State p = 0; p < n; ++p)
        for (Symbol a = 0; a < sigma; ++a)
            for (State q = 0; q < n; ++q)
                if (sol.value(varname::transition(p, a, q)) == 1) delta[p * sigma + a] = q;
    std::set<State> final;
    for (State q = 0; q < n; ++q)
        if (sol.value(varname::final_state(q)) == 1) final.insert(q);

    Dfa dfa(sample.alphabet(), n, 0, std::move(delta), std::move(final));
    if (!recognizes_sample(dfa, sample))
        throw SolverProtocolError("decoded DFA rejects a sample word");
    // Verified assignments can only over-count: xF bounds the true count.
    if (count_accepted_up_to(dfa, 2 * n - 2) > sol.value(varname::total))
        throw SolverProtocolError("decoded DFA counts more words than reported xF");
    return dfa;
}

} // namespace dfamin
