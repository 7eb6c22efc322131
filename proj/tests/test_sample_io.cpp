#include <doctest.h>

#include "dfamin/compare.hpp"
#include "dfamin/errors.hpp"
#include "dfamin/io.hpp"
#include "support.hpp"

using namespace dfamin;
using namespace testsupport;

TEST_CASE("empty sample parses and has only the trie root") {
    Sample s = parse_sample_text("0 2\n");
    CHECK(s.words().empty());
    CHECK(s.prefix_count() == 1);
}

TEST_CASE("sample round-trips through the text format") {
    Rng rng(5);
    std::vector<Word> words;
    for (int i = 0; i < 1000; ++i) words.push_back(random_word(rng, 3, 10));
    Sample original(Alphabet::indexed(3), words);
    Sample reread = parse_sample_text(format_sample_text(original));
    CHECK(reread.words() == original.words());
    CHECK(reread.sigma() == original.sigma());
}

TEST_CASE("trie node count equals the number of distinct prefixes") {
    // words: ab, abb, ba  ->  prefixes: eps, a, ab, abb, b, ba
    Sample s(Alphabet::indexed(2), {{0, 1}, {0, 1, 1}, {1, 0}});
    CHECK(s.prefix_count() == 6);
    CHECK(s.trie().is_word(0) == false);
    // breadth-first ids: eps=0, a=1, b=2, ab=3, ba=4, abb=5
    CHECK(s.trie().word_of(3) == Word{0, 1});
    CHECK(s.trie().is_word(3));
    CHECK(s.trie().word_of(5) == Word{0, 1, 1});
}

TEST_CASE("sample parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_sample_text(""), ParseError);
    CHECK_THROWS_AS(parse_sample_text("1 2\n2 0\n"), ParseError);     // short word
    CHECK_THROWS_AS(parse_sample_text("1 2\n1 5\n"), ParseError);     // symbol >= sigma
    CHECK_THROWS_AS(parse_sample_text("2 2\n1 0\n"), ParseError);     // count mismatch
    CHECK_THROWS_AS(parse_sample_text("1 2\n1 0 1\n"), ParseError);   // long word
    try {
        parse_sample_text("1 2\n1 7\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("recognizes_sample via one trie pass") {
    Sample s(Alphabet::indexed(2), {{0}, {0, 1}, {0, 1, 1}});
    CHECK(recognizes_sample(Dfa::trivial_accepting(Alphabet::indexed(2)), s));
    Dfa none(Alphabet::indexed(2), 1, 0, {0, 0}, {});
    CHECK(!recognizes_sample(none, s));
    CHECK(recognizes_sample(none, Sample(Alphabet::indexed(2), {})));

    // agreement with per-word accepts on random automata
    Rng rng(13);
    for (int i = 0; i < 40; ++i) {
        Dfa dfa = random_dfa(rng, 4, 2);
        std::vector<Word> words;
        for (int j = 0; j < 5; ++j) words.push_back(random_word(rng, 2, 5));
        Sample sample(Alphabet::indexed(2), words);
        bool expected = true;
        for (const Word& w : sample.words()) expected = expected && accepts(dfa, w);
        CHECK(recognizes_sample(dfa, sample) == expected);
    }
}

TEST_CASE("dfa json round-trip and canonical init") {
    Rng rng(37);
    for (int i = 0; i < 25; ++i) {
        Dfa dfa = random_dfa(rng, 5, 2);
        Dfa reread = parse_dfa_json(format_dfa_json(dfa));
        CHECK(reread.init() == 0);
        // renaming preserves the language
        CHECK(!distinguishing_witness(dfa, reread));
        // a second round-trip is byte-identical
        CHECK(format_dfa_json(reread) == format_dfa_json(dfa));
    }
}

TEST_CASE("dfa json rejects malformed documents") {
    CHECK_THROWS_AS(parse_dfa_json("{"), ParseError);
    CHECK_THROWS_AS(parse_dfa_json(R"({"alphabet":["a"],"states":2,"init":0,)"
                                   R"("delta":[[1]],"final":[]})"),
                    ParseError); // missing row: not total
    CHECK_THROWS_AS(parse_dfa_json(R"({"alphabet":["a"],"states":1,"init":0,)"
                                   R"("delta":[[1]],"final":[]})"),
                    ParseError); // target out of range
    CHECK_THROWS_AS(parse_dfa_json(R"({"alphabet":["a"],"states":1,"init":0,)"
                                   R"("delta":[[0,0]],"final":[]})"),
                    ParseError); // row wider than alphabet
}
