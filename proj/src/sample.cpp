#include "dfamin/sample.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace dfamin {

namespace {

struct BuildNode {
    std::map<Symbol, std::size_t> children;
    bool is_word = false;
};

} // namespace

PrefixTrie::PrefixTrie(std::size_t sigma, const std::vector<Word>& words) : sigma_(sigma) {
    std::vector<BuildNode> nodes(1);
    for (const Word& w : words) {
        std::size_t cur = 0;
        for (Symbol a : w) {
            if (a >= sigma) throw std::invalid_argument("sample word symbol outside alphabet");
            auto it = nodes[cur].children.find(a);
            if (it == nodes[cur].children.end()) {
                nodes.push_back(BuildNode{});
                it = nodes[cur].children.emplace(a, nodes.size() - 1).first;
            }
            cur = it->second;
        }
        nodes[cur].is_word = true;
    }

    // Renumber breadth-first, children in symbol order; the map keys are
    // already sorted, so a plain queue yields the canonical numbering.
    std::vector<std::int32_t> bfs_id(nodes.size(), -1);
    std::queue<std::size_t> queue;
    queue.push(0);
    bfs_id[0] = 0;
    std::int32_t next_id = 1;
    std::vector<std::size_t> order{0};
    while (!queue.empty()) {
        std::size_t node = queue.front();
        queue.pop();
        for (const auto& [a, child] : nodes[node].children) {
            bfs_id[child] = next_id++;
            order.push_back(child);
            queue.push(child);
        }
    }

    const std::size_t count = nodes.size();
    children_.assign(count * sigma_, no_child);
    parent_.assign(count, -1);
    symbol_.assign(count, 0);
    is_word_.assign(count, 0);
    for (std::size_t old_id : order) {
        std::int32_t id = bfs_id[old_id];
        is_word_[id] = nodes[old_id].is_word ? 1 : 0;
        for (const auto& [a, child] : nodes[old_id].children) {
            children_[id * sigma_ + a] = bfs_id[child];
            parent_[bfs_id[child]] = id;
            symbol_[bfs_id[child]] = a;
        }
    }
}

Word PrefixTrie::word_of(std::size_t node) const {
    Word w;
    for (std::int32_t cur = static_cast<std::int32_t>(node); parent_[cur] >= 0;
         cur = parent_[cur])
        w.push_back(symbol_[cur]);
    std::reverse(w.begin(), w.end());
    return w;
}

Sample::Sample(Alphabet alphabet, std::vector<Word> words)
    : alphabet_(std::move(alphabet)),
      words_([&words, this] {
          std::sort(words.begin(), words.end(), length_lex_less);
          words.erase(std::unique(words.begin(), words.end()), words.end());
          return std::move(words);
      }()),
      trie_(alphabet_.size(), words_) {}

namespace {

// Walks every trie node once, pairing it with the DFA state reached by its
// prefix, and calls fn(node, state).
template <typename Fn>
void traverse(const Dfa& dfa, State from, const Sample& sample, Fn&& fn) {
    const PrefixTrie& trie = sample.trie();
    std::vector<State> at(trie.node_count());
    at[0] = from;
    fn(std::size_t{0}, from);
    for (std::size_t node = 1; node < trie.node_count(); ++node) {
        State q = dfa.next(at[trie.parent(node)], trie.symbol_from_parent(node));
        at[node] = q;
        fn(node, q);
    }
}

} // namespace

bool recognizes_sample(const Dfa& dfa, const Sample& sample) {
    if (!dfa.alphabet().compatible_with(sample.alphabet()))
        throw std::invalid_argument("alphabet mismatch between dfa and sample");
    bool ok = true;
    traverse(dfa, dfa.init(), sample, [&](std::size_t node, State q) {
        if (sample.trie().is_word(node) && !dfa.is_final(q)) ok = false;
    });
    return ok;
}

std::vector<State> states_reached(const Dfa& dfa, State from, const Sample& sample) {
    std::set<State> reached;
    traverse(dfa, from, sample, [&](std::size_t node, State q) {
        if (sample.trie().is_word(node)) reached.insert(q);
    });
    return {reached.begin(), reached.end()};
}

} // namespace dfamin
