#include "dfamin/reduction_audit.hpp"

#include "dfamin/counting.hpp"
#include "dfamin/errors.hpp"

namespace dfamin {

SuitabilityReport audit_suitability(const Dfa& dfa, const ReductionWordSet& words,
                                    const ApnSatInstance& inst, const ReductionParams& params) {
    if (!dfa.alphabet().compatible_with(words.alphabet()))
        throw std::invalid_argument("alphabet mismatch between dfa and word set");

    SuitabilityReport rep;
    rep.states = dfa.n_states();
    rep.size_bound = params.n;
    rep.size_ok = rep.states <= rep.size_bound;

    rep.accepts_all = true;
    words.for_each_word([&](const Word& w) {
        if (!rep.accepts_all) return;
        if (!accepts(dfa, w)) {
            rep.accepts_all = false;
            rep.rejected_word = w;
        }
    });

    if (params.m < 0 || params.m > (1u << 24))
        throw GuardError("counting horizon " + params.m.str() + " too large to audit");
    const std::uint64_t m = params.m.convert_to<std::uint64_t>();
    rep.accepted_count = count_accepted_up_to(dfa, static_cast<unsigned>(m));
    rep.sample_count = words.count_within(m);
    rep.error_count = rep.accepted_count - rep.sample_count;
    rep.error_bound = params.k;
    rep.errors_ok = rep.accepts_all && rep.error_count <= rep.error_bound;

    rep.expected_error = params.M * params.r +
                         BigInt(params.s) * (BigInt(params.s) + params.T - 1);
    rep.error_exact = rep.accepts_all && rep.error_count == rep.expected_error;

    rep.assumptions = check_assumptions(inst, params);
    rep.ind_overlaps = words.ind_overlaps();
    return rep;
}

Problem1Instance problem1_instance(const ApnSatInstance& inst) {
    ReductionParams params = choose_params(inst);
    ReductionWordSet words = generate_positive_set(inst, params);
    BigInt k_prime = params.k + words.total_count();
    return Problem1Instance{words.expand_sample(), params.n, std::move(k_prime)};
}

} // namespace dfamin
