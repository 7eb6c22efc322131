#include "dfamin/reduction_params.hpp"

#include <stdexcept>

#include "dfamin/reduction_words.hpp"

namespace dfamin {

namespace {

ReductionParams derive(unsigned r, unsigned s, BigInt M, BigInt T, BigInt k, BigInt d,
                       bool proof_scale) {
    ReductionParams p;
    p.r = r;
    p.s = s;
    p.M = std::move(M);
    p.T = std::move(T);
    p.k = std::move(k);
    p.omega2 = 18 + BigInt(s) + p.M + 4 * p.k + BigInt(r) + 2 * BigInt(r) * s +
               BigInt(r) * r * p.T;
    p.d = std::move(d);
    p.omega1 = p.d * (2 + BigInt(r));
    p.n = p.omega1 + p.omega2;
    p.m = 2 * p.n - 2;
    p.proof_scale = proof_scale;
    return p;
}

} // namespace

ReductionParams choose_params(const ApnSatInstance& inst) {
    inst.validate();
    ApnSatInstance padded = pad_variables(inst, 2);
    const unsigned r = padded.r;
    const unsigned s = padded.s();

    BigInt M = 3 * (BigInt(s) + r);
    BigInt T = 2 * BigInt(s) + 3 * BigInt(r);
    BigInt k = BigInt(s) * (T + s - 1) + M * r;
    ReductionParams p = derive(r, s, M, T, k, /*d placeholder*/ 0, true);
    p.d = p.omega2 + 1;
    p.omega1 = p.d * (2 + BigInt(r));
    p.n = p.omega1 + p.omega2;
    p.m = 2 * p.n - 2;

    AssumptionReport rep = check_assumptions(padded, p);
    // The six inequalities of the parameter choice, re-checked rather than
    // assumed. 1 and 2 hold with equality by construction.
    bool ok = p.n >= p.omega1 + p.omega2 && p.k >= p.M * r + BigInt(s) * (BigInt(s) + p.T - 1) &&
              rep.a && rep.b && rep.c && rep.d;
    if (!ok) throw std::logic_error("reduction parameter inequalities failed");
    return p;
}

ReductionParams tiny_params(const ApnSatInstance& inst, BigInt k, BigInt d, BigInt T, BigInt M) {
    inst.validate();
    ApnSatInstance padded = pad_variables(inst, 2);
    if (k < 0 || d < 1 || T < 1 || M < 1)
        throw std::invalid_argument("tiny parameters must be positive (k >= 0, d,T,M >= 1)");
    return derive(padded.r, padded.s(), std::move(M), std::move(T), std::move(k), std::move(d),
                  false);
}

AssumptionReport check_assumptions(const ApnSatInstance& inst, const ReductionParams& params) {
    ApnSatInstance padded = pad_variables(inst, 2);
    AssumptionReport rep;
    rep.max_word_length = BigInt(generate_positive_set(padded, params).max_length());
    BigInt r(params.r), s(params.s);
    BigInt max_rd = std::max(BigInt(params.r), params.d);
    rep.a = params.m >= 2 * rep.max_word_length + max_rd;
    rep.b = params.k < params.M * params.T;
    rep.c = params.n < params.d * (2 + r) + params.d;
    rep.d = params.k <= s * (params.T + s - 1) + params.M * r;
    return rep;
}

} // namespace dfamin
