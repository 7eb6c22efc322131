#include "dfamin/reduction_witness.hpp"

#include <stdexcept>

#include "dfamin/errors.hpp"

namespace dfamin {

namespace {

std::uint64_t to_index(const BigInt& value, const char* what) {
    if (value < 0 || value > 20'000'000)
        throw GuardError(std::string(what) + " too large to materialize: " + value.str());
    return value.convert_to<std::uint64_t>();
}

constexpr Symbol A = 0;
constexpr Symbol B = 1;

} // namespace

Dfa build_witness_dfa(const ApnSatInstance& inst, const ReductionParams& params,
                      const Valuation& nu) {
    ApnSatInstance padded = pad_variables(inst, 2);
    if (params.r != padded.r || params.s != padded.s())
        throw std::invalid_argument("parameters were chosen for a different instance shape");
    if (nu.value.size() != std::size_t(padded.r) + 1 || !satisfies(padded, nu))
        throw std::invalid_argument("valuation does not satisfy the instance");

    const unsigned r = padded.r;
    const unsigned s = padded.s();
    const std::uint64_t k = to_index(params.k, "k");
    const std::uint64_t d = to_index(params.d, "d");
    const std::uint64_t T = to_index(params.T, "T");
    const std::uint64_t M = to_index(params.M, "M");
    const std::uint64_t total_states =
        to_index(params.omega1 + params.omega2 + r, "state count");

    std::vector<State> delta;
    std::set<State> final;
    State next_state = 0;
    auto fresh = [&] { return next_state++; };

    const State rej = fresh();
    const State init = fresh();
    const State q_a = fresh(), q_b = fresh();
    const State acc = fresh();
    final.insert(acc);
    const State q_top = fresh(), q_bot = fresh(), q_var = fresh(), q_cl = fresh();

    // Reserve the full table up front; unset cells point at the sink.
    delta.assign(total_states * 2, rej);
    auto set = [&](State p, Symbol x, State q) { delta[p * 2 + x] = q; };

    set(init, A, q_a);
    set(init, B, q_b);
    set(q_a, A, q_top);
    set(q_a, B, q_bot);
    set(q_b, A, q_var);
    set(q_b, B, q_cl);

    // Chain builder: head --x--> s1 --x--> ... --x--> s_len, returning the
    // states; every chain state can additionally hop elsewhere later.
    auto chain = [&](State head, Symbol x, std::uint64_t len) {
        std::vector<State> states;
        State cur = head;
        for (std::uint64_t i = 0; i < len; ++i) {
            State nxt = fresh();
            set(cur, x, nxt);
            states.push_back(nxt);
            cur = nxt;
        }
        return states;
    };

    // Suffix tails shared by every route: from the u_a entry the accepted
    // words are b^j . a for j in [0, k], and symmetrically for u_b.
    const State ua_entry = fresh();
    set(ua_entry, A, acc);
    for (State q : chain(ua_entry, B, k)) set(q, A, acc);

    const State ub_entry = fresh();
    set(ub_entry, B, acc);
    for (State q : chain(ub_entry, A, k)) set(q, B, acc);

    // Top / bottom blocks: entry --b--> u-chain (k+1 states, each hopping on
    // 'a' into the junction), then an a-ascent of d+2 states with the final
    // placed at depth d (top) or d+1 (bottom), ending in a 'b' hop to the
    // u_a tail.
    auto top_block = [&](State entry, bool final_at_d) {
        State u_head = fresh();
        set(entry, B, u_head);
        std::vector<State> u_states{u_head};
        for (State q : chain(u_head, B, k)) u_states.push_back(q);
        State junction = fresh(); // depth 0 of the ascent
        for (State q : u_states) set(q, A, junction);
        std::vector<State> ascent{junction};
        for (State q : chain(junction, A, d + 1)) ascent.push_back(q);
        final.insert(ascent[final_at_d ? d : d + 1]);
        set(ascent[d + 1], B, ua_entry);
        return ascent; // [0..d+1]
    };
    const std::vector<State> top_ascent = top_block(q_top, true);
    const std::vector<State> bot_ascent = top_block(q_bot, false);

    // Variable block tops: q_var --a--> M-state a-chain, all hopping on 'b'
    // to q_X, then the variable b-chain.
    State vu_head = fresh();
    set(q_var, A, vu_head);
    std::vector<State> vu_states{vu_head};
    for (State q : chain(vu_head, A, M - 1)) vu_states.push_back(q);
    const State q_x = fresh();
    for (State q : vu_states) set(q, B, q_x);
    std::vector<State> var_heads; // q_{x_1} .. q_{x_r}
    {
        State cur = q_x;
        for (unsigned i = 0; i < r; ++i) {
            State nxt = fresh();
            set(cur, B, nxt);
            var_heads.push_back(nxt);
            cur = nxt;
        }
    }

    // Per-variable descent (d+1 states: entry through branch point), then
    // the 2s membership states and the r*T index states; acceptance along
    // the tail realizes the exponent set of the variable.
    std::vector<State> descent_entry(r + 1, 0);
    for (unsigned i = 1; i <= r; ++i) {
        State entry = fresh();
        set(var_heads[i - 1], A, entry);
        descent_entry[i] = entry;
        std::vector<State> descent{entry};
        for (State q : chain(entry, B, d)) descent.push_back(q);
        const State branch = descent[d];
        set(branch, A, nu.of(i) ? top_ascent[1] : bot_ascent[1]);

        std::vector<State> tail = chain(branch, B, std::uint64_t(2) * s + T * r);
        for (unsigned j = 1; j <= s; ++j) {
            const bool applies = padded.clause(j).first->count(i) != 0;
            if (applies)
                final.insert(tail[j - 1]); // position j
            else
                final.insert(tail[s + j - 1]); // position s + j
        }
        for (std::uint64_t t = 0; t < T; ++t)
            final.insert(tail[2 * s + i + t * r - 1]); // position 2s + i + t r
        set(tail.back(), A, ub_entry);
    }

    // Clause block: q_cl --a--> q_{C_1} --a--> ... --a--> q_{C_s}; each
    // clause state hops on 'b' into the descent of its chosen variable.
    {
        std::vector<State> clause_states = chain(q_cl, A, s);
        for (unsigned j = 1; j <= s; ++j) {
            auto [vars, positive] = padded.clause(j);
            State target = 0;
            bool found = false;
            for (unsigned i : *vars) // sets iterate ascending: smallest index
                if (nu.of(i) == positive) {
                    target = descent_entry[i];
                    found = true;
                    break;
                }
            if (!found) throw std::logic_error("satisfying valuation left a clause uncovered");
            set(clause_states[j - 1], B, target);
        }
    }

    if (next_state != total_states)
        throw std::logic_error("witness construction allocated " + std::to_string(next_state) +
                               " states, expected " + std::to_string(total_states));
    return Dfa(Alphabet::ab(), static_cast<State>(total_states), init, std::move(delta),
               std::move(final));
}

} // namespace dfamin
