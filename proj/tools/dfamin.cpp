// Command-line surface: learning, encoding, solving, oracle checks, the
// hardness-instance generator, sample generation, and benchmarking.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dfamin/bench.hpp"
#include "dfamin/compare.hpp"
#include "dfamin/counting.hpp"
#include "dfamin/errors.hpp"
#include "dfamin/heuristic.hpp"
#include "dfamin/ilp_encode.hpp"
#include "dfamin/ilp_solve.hpp"
#include "dfamin/io.hpp"
#include "dfamin/lp_format.hpp"
#include "dfamin/oracle.hpp"
#include "dfamin/reduction_audit.hpp"
#include "dfamin/reduction_witness.hpp"

using namespace dfamin;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 0;
    std::int64_t timeout_ms = 0;
    bool quiet = false;
};

std::ostream& info(const GlobalOpts& g) {
    static std::ostream null_stream(nullptr);
    return g.quiet ? null_stream : std::cout;
}

Deadline deadline_from(const GlobalOpts& g) {
    if (g.timeout_ms <= 0) return {};
    return std::chrono::steady_clock::now() + std::chrono::milliseconds(g.timeout_ms);
}

int run(int argc, char** argv) {
    CLI::App app{"Learning DFAs from positive samples by minimizing bounded word counts"};
    app.require_subcommand(1);
    // Global flags may appear before or after the subcommand name.
    app.fallthrough();
    GlobalOpts global;
    app.add_option("--seed", global.seed, "Seed for all randomized subcommands");
    app.add_option("--timeout-ms", global.timeout_ms, "Cooperative time budget");
    app.add_flag("--quiet", global.quiet, "Suppress informational output");

    // learn
    std::string learn_sample, learn_out;
    unsigned learn_n = 1;
    HeuristicConfig heuristic_cfg;
    auto* learn = app.add_subcommand("learn", "Randomized-restart search for a low-count DFA");
    learn->add_option("--sample", learn_sample, "Sample file")->required();
    learn->add_option("--states,-n", learn_n, "State bound")->required();
    learn->add_option("--init-rand", heuristic_cfg.init_rand, "Random draws per run");
    learn->add_option("--nb-run", heuristic_cfg.nb_run, "Number of restart runs");
    learn->add_option("--out", learn_out, "Output DFA file")->required();
    learn->callback([&] {
        Sample sample = read_sample(learn_sample);
        heuristic_cfg.seed = global.seed;
        heuristic_cfg.n = learn_n;
        ScoredDfa result = min_score_learn(sample, heuristic_cfg, deadline_from(global));
        write_dfa(result.dfa, learn_out);
        std::cout << "score=" << result.score << " start=" << result.start_state << '\n';
    });

    // encode
    std::string encode_sample, encode_out;
    unsigned encode_n = 1;
    auto* encode = app.add_subcommand("encode", "Write the integer program for a sample");
    encode->add_option("--sample", encode_sample, "Sample file")->required();
    encode->add_option("--states,-n", encode_n, "State bound")->required();
    encode->add_option("--out", encode_out, "Output LP file")->required();
    encode->callback([&] {
        Sample sample = read_sample(encode_sample);
        IlpModel model = build_model(sample, encode_n);
        write_file(encode_out, emit_lp(model));
        info(global) << "variables=" << model.variables().size()
                     << " constraints=" << model.constraints().size() << '\n';
    });

    // solve
    std::string solve_sample, solve_cmd, solve_out;
    unsigned solve_n = 1;
    bool solve_bisect = false;
    auto* solve = app.add_subcommand("solve", "Minimize the bounded word count via a solver");
    solve->add_option("--sample", solve_sample, "Sample file")->required();
    solve->add_option("--states,-n", solve_n, "State bound")->required();
    solve->add_option("--solver-cmd", solve_cmd,
                      "Solver command with {lp} and {sol} placeholders");
    solve->add_flag("--binary-search", solve_bisect, "Bisect with feasibility queries");
    solve->add_option("--out", solve_out, "Output DFA file")->required();
    solve->callback([&] {
        Sample sample = read_sample(solve_sample);
        if (solve_cmd.empty()) throw SolverUnavailable("no --solver-cmd given");
        SolverFn solver = make_external_solver(solve_cmd);
        MinimizeResult result = solve_bisect ? binary_search_min(sample, solve_n, solver)
                                             : solve_min(sample, solve_n, solver);
        write_dfa(result.dfa, solve_out);
        std::cout << "count=" << result.count << " queries=" << result.queries << '\n';
    });

    // oracle
    std::string oracle_sample;
    unsigned oracle_n = 1;
    std::string oracle_k;
    std::uint64_t oracle_guard = OracleOptions{}.guard_limit;
    auto* oracle = app.add_subcommand("oracle", "Exhaustive minimum over small instances");
    oracle->add_option("--sample", oracle_sample, "Sample file")->required();
    oracle->add_option("--states,-n", oracle_n, "State bound")->required();
    oracle->add_option("--k", oracle_k, "Decide min <= k instead of reporting the minimum");
    oracle->add_option("--guard", oracle_guard, "Enumeration guard limit");
    oracle->callback([&] {
        Sample sample = read_sample(oracle_sample);
        OracleOptions opts;
        opts.guard_limit = oracle_guard;
        opts.deadline = deadline_from(global);
        if (oracle_k.empty()) {
            BigInt min_count = enumerate_min_count(sample, oracle_n, opts).min_count;
            std::cout << "min_count=" << min_count << '\n';
        } else {
            bool yes = decide_problem1(sample, oracle_n, BigInt(oracle_k), opts);
            std::cout << "decision=" << (yes ? "true" : "false") << '\n';
        }
    });

    // reduce
    std::string reduce_apn, reduce_sample_out, reduce_witness_out, reduce_valuation;
    std::string reduce_scale = "proof";
    std::uint64_t tiny_k = 4, tiny_d = 3, tiny_t = 2, tiny_m = 3;
    bool reduce_audit = false;
    auto* reduce = app.add_subcommand("reduce", "Instance generator from all-pos/neg SAT");
    reduce->add_option("--apn", reduce_apn, "APN-SAT input file")->required();
    reduce->add_option("--out-sample", reduce_sample_out, "Positive sample output")->required();
    reduce->add_option("--witness", reduce_witness_out, "Witness DFA output (needs --valuation)");
    reduce->add_option("--valuation", reduce_valuation, "Satisfying valuation \"1=T 2=F ...\"");
    reduce->add_option("--scale", reduce_scale, "proof (derived parameters) or tiny")
        ->check(CLI::IsMember({"proof", "tiny"}));
    reduce->add_option("--k", tiny_k, "Error budget (tiny scale)");
    reduce->add_option("--d", tiny_d, "Run length (tiny scale)");
    reduce->add_option("--T", tiny_t, "Index-block repetitions (tiny scale)");
    reduce->add_option("--M", tiny_m, "Infix-ladder size (tiny scale)");
    reduce->add_flag("--audit", reduce_audit, "Audit the witness against the word set");
    reduce->callback([&] {
        ApnSatInstance inst = parse_apn(read_file(reduce_apn));
        ReductionParams params = reduce_scale == "tiny"
                                     ? tiny_params(inst, tiny_k, tiny_d, tiny_t, tiny_m)
                                     : choose_params(inst);
        ReductionWordSet words = generate_positive_set(inst, params);
        write_sample(words.expand_sample(), reduce_sample_out);
        std::cout << "n=" << params.n << " k=" << params.k
                  << " k_prime=" << params.k + words.total_count()
                  << " words=" << words.total_count() << '\n';
        if (!reduce_witness_out.empty() || reduce_audit) {
            Valuation nu = reduce_valuation.empty()
                               ? [&] {
                                     auto found = find_satisfying_valuation(inst);
                                     if (!found)
                                         throw std::invalid_argument(
                                             "instance is unsatisfiable; no witness exists");
                                     return *found;
                                 }()
                               : parse_valuation(reduce_valuation, pad_variables(inst, 2).r);
            Dfa witness = build_witness_dfa(inst, params, nu);
            if (!reduce_witness_out.empty()) write_dfa(witness, reduce_witness_out);
            if (reduce_audit) {
                SuitabilityReport rep = audit_suitability(witness, words, inst, params);
                auto mark = [](bool ok, char letter) {
                    return ok ? std::string(1, letter) : std::string("!") + letter;
                };
                std::cout << "audit: states=" << rep.states << "/" << rep.size_bound
                          << (rep.size_ok ? " ok" : " FAIL") << " accepts_all="
                          << (rep.accepts_all ? "yes" : "no") << " errors=" << rep.error_count
                          << "/" << rep.error_bound << (rep.errors_ok ? " ok" : " FAIL")
                          << " assumptions=" << mark(rep.assumptions.a, 'A')
                          << mark(rep.assumptions.b, 'B') << mark(rep.assumptions.c, 'C')
                          << mark(rep.assumptions.d, 'D')
                          << " index_overlaps=" << rep.ind_overlaps << '\n';
            }
        }
    });

    // gen-sample
    std::string gen_out;
    auto* gen = app.add_subcommand("gen-sample", "Random sample from a hidden small DFA");
    gen->add_option("--out", gen_out, "Output sample file")->required();
    gen->callback([&] {
        Sample sample = generate_experiment_sample(global.seed);
        write_sample(sample, gen_out);
        info(global) << "words=" << sample.words().size() << '\n';
    });

    // bench
    std::string bench_sample, bench_out, bench_algos = "heuristic", bench_solver;
    unsigned bench_n = 1, bench_runs = 1;
    auto* bench = app.add_subcommand("bench", "Timed algorithm runs appended to a CSV");
    bench->add_option("--sample", bench_sample, "Sample file")->required();
    bench->add_option("--states,-n", bench_n, "State bound")->required();
    bench->add_option("--algos", bench_algos,
                      "Comma-separated: heuristic,ilp,ilp-binary-search,oracle");
    bench->add_option("--runs", bench_runs, "Repetitions (seeds seed..seed+runs-1)");
    bench->add_option("--solver-cmd", bench_solver, "Solver command for the ilp algorithms");
    bench->add_option("--out", bench_out, "CSV file to append to")->required();
    bench->callback([&] {
        Sample sample = read_sample(bench_sample);
        std::vector<std::string> algos;
        std::istringstream in(bench_algos);
        std::string item;
        while (std::getline(in, item, ',')) algos.push_back(item);
        BenchOptions opts;
        opts.instance = bench_sample;
        opts.runs = bench_runs;
        opts.timeout_ms = global.timeout_ms;
        opts.seed = global.seed;
        if (!bench_solver.empty()) opts.solver = make_external_solver(bench_solver);
        for (const BenchRecord& rec : run_bench(sample, bench_n, algos, opts, bench_out))
            info(global) << to_csv_row(rec) << '\n';
    });

    // count
    std::string count_dfa;
    unsigned count_m = 0;
    auto* count = app.add_subcommand("count", "Accepted words up to a length bound");
    count->add_option("--dfa", count_dfa, "DFA file")->required();
    count->add_option("-m,--max-len", count_m, "Length bound")->required();
    count->callback([&] {
        std::cout << count_accepted_up_to(read_dfa(count_dfa), count_m) << '\n';
    });

    // witness
    std::string witness_a, witness_b;
    auto* witness = app.add_subcommand("witness", "Shortest word telling two DFAs apart");
    witness->add_option("--a", witness_a, "First DFA file")->required();
    witness->add_option("--b", witness_b, "Second DFA file")->required();
    witness->callback([&] {
        Dfa a = read_dfa(witness_a);
        Dfa b = read_dfa(witness_b);
        auto w = distinguishing_witness(a, b);
        if (!w)
            std::cout << "equal\n";
        else
            std::cout << "witness=" << (w->empty() ? "<epsilon>" : a.alphabet().format(*w))
                      << " length=" << w->size() << '\n';
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const GuardError& e) {
        std::cerr << "too large: " << e.what() << '\n';
        return 3;
    } catch (const SolverUnavailable& e) {
        std::cerr << "solver unavailable: " << e.what() << '\n';
        return 4;
    } catch (const TimeoutExceeded& e) {
        std::cerr << "timeout: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
