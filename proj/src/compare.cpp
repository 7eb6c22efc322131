#include "dfamin/compare.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <vector>

namespace dfamin {

namespace {

void require_compatible(const Dfa& a, const Dfa& b) {
    if (!a.alphabet().compatible_with(b.alphabet()))
        throw std::invalid_argument("alphabet mismatch between automata");
}

} // namespace

std::optional<Word> distinguishing_witness(const Dfa& a, const Dfa& b) {
    require_compatible(a, b);
    const std::size_t sigma = a.sigma();
    const std::size_t nb = b.n_states();
    auto pair_id = [nb](State qa, State qb) { return std::size_t(qa) * nb + qb; };

    const std::size_t total = std::size_t(a.n_states()) * nb;
    std::vector<std::int64_t> pred(total, -2); // -2 unseen, -1 root
    std::vector<Symbol> via(total, 0);

    auto mismatch = [&](State qa, State qb) { return a.is_final(qa) != b.is_final(qb); };
    auto reconstruct = [&](std::size_t id) {
        Word w;
        while (pred[id] >= 0) {
            w.push_back(via[id]);
            id = static_cast<std::size_t>(pred[id]);
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    std::size_t root = pair_id(a.init(), b.init());
    pred[root] = -1;
    if (mismatch(a.init(), b.init())) return Word{};

    std::queue<std::pair<State, State>> queue;
    queue.push({a.init(), b.init()});
    while (!queue.empty()) {
        auto [qa, qb] = queue.front();
        queue.pop();
        for (Symbol s = 0; s < sigma; ++s) {
            State na = a.next(qa, s);
            State nb2 = b.next(qb, s);
            std::size_t id = pair_id(na, nb2);
            if (pred[id] != -2) continue;
            pred[id] = static_cast<std::int64_t>(pair_id(qa, qb));
            via[id] = s;
            if (mismatch(na, nb2)) return reconstruct(id);
            queue.push({na, nb2});
        }
    }
    return std::nullopt;
}

LanguageRelation language_relation(const Dfa& a, const Dfa& b) {
    require_compatible(a, b);
    const std::size_t sigma = a.sigma();
    const std::size_t nb = b.n_states();
    auto pair_id = [nb](State qa, State qb) { return std::size_t(qa) * nb + qb; };

    std::vector<bool> seen(std::size_t(a.n_states()) * nb, false);
    bool a_not_subset = false; // reachable (q in F_a, q' not in F_b)
    bool b_not_subset = false;

    std::vector<std::pair<State, State>> stack{{a.init(), b.init()}};
    seen[pair_id(a.init(), b.init())] = true;
    while (!stack.empty()) {
        auto [qa, qb] = stack.back();
        stack.pop_back();
        if (a.is_final(qa) && !b.is_final(qb)) a_not_subset = true;
        if (b.is_final(qb) && !a.is_final(qa)) b_not_subset = true;
        for (Symbol s = 0; s < sigma; ++s) {
            std::size_t id = pair_id(a.next(qa, s), b.next(qb, s));
            if (!seen[id]) {
                seen[id] = true;
                stack.push_back({a.next(qa, s), b.next(qb, s)});
            }
        }
    }

    if (!a_not_subset && !b_not_subset) return LanguageRelation::Equal;
    if (!a_not_subset) return LanguageRelation::AStrictSubsetB;
    if (!b_not_subset) return LanguageRelation::BStrictSubsetA;
    return LanguageRelation::Incomparable;
}

} // namespace dfamin
