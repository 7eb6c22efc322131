#include <doctest.h>

#include "dfamin/compare.hpp"
#include "dfamin/counting.hpp"
#include "support.hpp"

using namespace dfamin;
using namespace testsupport;

TEST_CASE("identical automata have no witness and compare equal") {
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        Dfa dfa = random_dfa(rng, 4, 2);
        CHECK(!distinguishing_witness(dfa, dfa));
        CHECK(language_relation(dfa, dfa) == LanguageRelation::Equal);
    }
}

TEST_CASE("empty language is a strict subset of everything nonempty") {
    Dfa none(Alphabet::indexed(2), 1, 0, {0, 0}, {});
    Dfa all = Dfa::trivial_accepting(Alphabet::indexed(2));
    CHECK(language_relation(none, all) == LanguageRelation::AStrictSubsetB);
    CHECK(language_relation(all, none) == LanguageRelation::BStrictSubsetA);
    auto w = distinguishing_witness(none, all);
    REQUIRE(w);
    CHECK(w->empty()); // epsilon already separates them
}

TEST_CASE("unary pair attains the witness length bound exactly") {
    for (unsigned m = 2; m <= 5; ++m)
        for (unsigned n = m; n <= 5; ++n) {
            Dfa path = unary_path(m);             // { a^{m-2} }
            Dfa ring = unary_ring(n, (m - 2) % n); // { a^x : x ≡ m-2 mod n }
            auto w = distinguishing_witness(path, ring);
            REQUIRE(w);
            CHECK(w->size() == m + n - 2);
            CHECK(*w == Word(m + n - 2, 0));
        }
}

TEST_CASE("witness agrees with brute-force scan and obeys the size bound") {
    Rng rng(17);
    for (int i = 0; i < 60; ++i) {
        Dfa a = random_dfa(rng, 4, 2);
        Dfa b = random_dfa(rng, 4, 2);
        unsigned bound = a.n_states() + b.n_states() - 2;
        auto expected = brute_witness(a, b, bound);
        auto got = distinguishing_witness(a, b);
        if (expected) {
            REQUIRE(got);
            CHECK(*got == *expected); // length-lex minimum matches scan order
            CHECK(got->size() <= bound);
            // soundness: exactly one side accepts
            CHECK(accepts(a, *got) != accepts(b, *got));
        } else {
            // nothing within the bound: the languages are equal
            CHECK(!got);
            CHECK(language_relation(a, b) == LanguageRelation::Equal);
        }
    }
}

TEST_CASE("witness absent iff languages equal") {
    Rng rng(19);
    for (int i = 0; i < 40; ++i) {
        Dfa a = random_dfa(rng, 3, 2);
        Dfa b = random_dfa(rng, 3, 2);
        bool equal = language_relation(a, b) == LanguageRelation::Equal;
        CHECK(equal == !distinguishing_witness(a, b).has_value());
    }
}

TEST_CASE("ring versus sink: sink recognizes the strict subset") {
    for (unsigned n = 2; n <= 5; ++n) {
        Dfa ring = unary_ring(n, n - 2);
        Dfa sink = unary_path(n); // { a^{n-2} }
        CHECK(language_relation(sink, ring) == LanguageRelation::AStrictSubsetB);
    }
}

TEST_CASE("strict inclusion shows up in bounded counts") {
    Rng rng(29);
    int seen = 0;
    for (int i = 0; i < 200 && seen < 12; ++i) {
        Dfa a = random_dfa(rng, 4, 2);
        Dfa b = random_dfa(rng, 4, 2);
        if (language_relation(a, b) != LanguageRelation::AStrictSubsetB) continue;
        ++seen;
        unsigned h = a.n_states() + b.n_states() - 2;
        CHECK(count_accepted_up_to(a, h) < count_accepted_up_to(b, h));
    }
    CHECK(seen > 0);
}

TEST_CASE("alphabet size mismatch is rejected") {
    Dfa two = Dfa::trivial_accepting(Alphabet::indexed(2));
    Dfa three = Dfa::trivial_accepting(Alphabet::indexed(3));
    CHECK_THROWS_AS(distinguishing_witness(two, three), std::invalid_argument);
    CHECK_THROWS_AS(language_relation(two, three), std::invalid_argument);
}
