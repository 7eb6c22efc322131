#pragma once

#include <optional>

#include "dfamin/dfa.hpp"

namespace dfamin {

enum class LanguageRelation {
    Equal,
    AStrictSubsetB,
    BStrictSubsetA,
    Incomparable,
};

/// Shortest word accepted by exactly one of the two automata, or nullopt iff
/// they recognize the same language. Breadth-first search over the product
/// graph, expanding symbols in ascending order, so the result is the
/// length-lexicographic minimum; its length is at most
/// |a| + |b| - 2 whenever it exists.
std::optional<Word> distinguishing_witness(const Dfa& a, const Dfa& b);

/// Exact classification of L(a) vs L(b) over the full (infinite) languages,
/// decided by product reachability.
LanguageRelation language_relation(const Dfa& a, const Dfa& b);

} // namespace dfamin
