#include <doctest.h>

#include "dfamin/counting.hpp"
#include "dfamin/errors.hpp"
#include "support.hpp"

using namespace dfamin;
using namespace testsupport;

TEST_CASE("empty sample has minimum zero") {
    Sample empty(Alphabet::indexed(2), {});
    for (unsigned n = 1; n <= 3; ++n) {
        OracleResult r = enumerate_min_count(empty, n);
        CHECK(r.min_count == 0);
        CHECK(r.witness.final().empty());
    }
}

TEST_CASE("one state forces the trivial acceptor") {
    Sample p_a(Alphabet::indexed(2), {{0}});
    OracleResult r = enumerate_min_count(p_a, 1);
    CHECK(r.min_count == 1); // horizon 2n-2 = 0: only epsilon is counted
    CHECK(r.witness.final() == std::set<State>{0});
    CHECK(r.enumerated == 2); // one table, two final sets
}

TEST_CASE("witness attains the minimum and is deterministic") {
    Sample sample(Alphabet::indexed(2), {{0}});
    OracleResult a = enumerate_min_count(sample, 2);
    OracleResult b = enumerate_min_count(sample, 2);
    CHECK(a.min_count == b.min_count);
    CHECK(a.witness == b.witness);
    CHECK(recognizes_sample(a.witness, sample));
    CHECK(count_accepted_up_to(a.witness, 2) == a.min_count);

    // the minimum is real: scan all members by brute force
    BigInt best = -1;
    for (std::uint32_t bits = 0; bits < 256; ++bits) {
        std::vector<State> delta{(bits >> 0) & 1, (bits >> 1) & 1, (bits >> 2) & 1,
                                 (bits >> 3) & 1};
        for (std::uint32_t mask = 0; mask < 4; ++mask) {
            std::set<State> final;
            if (mask & 1) final.insert(0);
            if (mask & 2) final.insert(1);
            Dfa dfa(Alphabet::indexed(2), 2, 0, delta, final);
            if (!recognizes_sample(dfa, sample)) continue;
            BigInt c = brute_count(dfa, 2);
            if (best < 0 || c < best) best = c;
        }
    }
    CHECK(a.min_count == best);
}

TEST_CASE("decide_problem1 thresholds") {
    Sample sample(Alphabet::indexed(2), {{0}});
    CHECK(decide_problem1(sample, 2, max_count(2, 2)));
    CHECK(!decide_problem1(sample, 2, 0)); // "a" itself must be counted
    BigInt min = enumerate_min_count(sample, 2).min_count;
    CHECK(decide_problem1(sample, 2, min));
    CHECK(!decide_problem1(sample, 2, min - 1));
}

TEST_CASE("guard refuses oversized enumerations") {
    Sample sample(Alphabet::indexed(3), {{0}});
    CHECK_THROWS_AS(enumerate_min_count(sample, 6), GuardError);
    OracleOptions opts;
    opts.guard_limit = 1; // everything is too big now
    CHECK_THROWS_AS(enumerate_min_count(sample, 1, opts), GuardError);
}

TEST_CASE("count-minimal witnesses are language minimal") {
    Rng rng(53);
    for (int i = 0; i < 12; ++i) {
        const unsigned n = 2 + static_cast<unsigned>(uniform_index(rng, 2));
        std::vector<Word> words;
        const unsigned count = 1 + static_cast<unsigned>(uniform_index(rng, 3));
        for (unsigned j = 0; j < count; ++j) words.push_back(random_word(rng, 2, 3));
        Sample sample(Alphabet::indexed(2), words);
        OracleResult r = enumerate_min_count(sample, n);
        CHECK(certify_language_minimal(r.witness, sample, n));
    }
}

TEST_CASE("trivial acceptor is usually not language minimal") {
    Sample sample(Alphabet::indexed(2), {{0}});
    Dfa trivial = Dfa::trivial_accepting(Alphabet::indexed(2));
    CHECK(certify_language_minimal(trivial, sample, 1)); // nothing smaller exists
    CHECK(!certify_language_minimal(trivial, sample, 2));
}

TEST_CASE("short horizons can crown non-language-minimal automata") {
    // Rings are count-minimal up to 2n-3 yet a strict-subset competitor
    // exists, so the horizon 2n-2 is necessary.
    for (unsigned n = 2; n <= 3; ++n) {
        Dfa ring = unary_ring(n, n - 2);
        Sample sample(Alphabet({"a"}),
                      {Word(n - 2, 0)}); // the single word a^{n-2}
        OracleOptions short_horizon;
        short_horizon.horizon = 2 * n - 3;
        BigInt best_short = enumerate_min_count(sample, n, short_horizon).min_count;
        CHECK(count_accepted_up_to(ring, 2 * n - 3) == best_short);
        CHECK(!certify_language_minimal(ring, sample, n));
    }
}
