#pragma once

#include <cstdint>
#include <vector>

#include "dfamin/alphabet.hpp"
#include "dfamin/dfa.hpp"

namespace dfamin {

/// Deterministic trie over all prefixes of a word set, with nodes numbered
/// breadth-first and symbol-ascending; the root (epsilon) is node 0. The
/// node count equals |Pref(P)| for non-empty P (the root is always present).
class PrefixTrie {
public:
    static constexpr std::int32_t no_child = -1;

    PrefixTrie(std::size_t sigma, const std::vector<Word>& words);

    std::size_t sigma() const { return sigma_; }
    std::size_t node_count() const { return parent_.size(); }
    std::int32_t child(std::size_t node, Symbol a) const {
        return children_[node * sigma_ + a];
    }
    std::int32_t parent(std::size_t node) const { return parent_[node]; }
    Symbol symbol_from_parent(std::size_t node) const { return symbol_[node]; }
    bool is_word(std::size_t node) const { return is_word_[node] != 0; }
    /// The prefix spelled from the root to this node.
    Word word_of(std::size_t node) const;

private:
    std::size_t sigma_;
    std::vector<std::int32_t> children_;
    std::vector<std::int32_t> parent_;
    std::vector<Symbol> symbol_;
    std::vector<std::uint8_t> is_word_;
};

/// A positive sample: an alphabet plus a finite set of words, indexed by the
/// trie of all their prefixes. Words are kept deduplicated in
/// length-lexicographic order, so samples are deterministic values.
class Sample {
public:
    Sample(Alphabet alphabet, std::vector<Word> words);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t sigma() const { return alphabet_.size(); }
    const std::vector<Word>& words() const { return words_; }
    bool empty() const { return words_.empty(); }
    const PrefixTrie& trie() const { return trie_; }
    /// |Pref(P)|, the size measure used by the encodings.
    std::size_t prefix_count() const { return trie_.node_count(); }

private:
    Alphabet alphabet_;
    std::vector<Word> words_;
    PrefixTrie trie_;
};

/// True iff the DFA accepts every word of the sample. Each trie node is
/// visited exactly once (a single traversal, not per-word re-runs).
bool recognizes_sample(const Dfa& dfa, const Sample& sample);

/// States of `dfa` reached from `from` by words of the sample, as a sorted
/// list; computed by the same single trie traversal.
std::vector<State> states_reached(const Dfa& dfa, State from, const Sample& sample);

} // namespace dfamin
