#include "dfamin/dfa.hpp"

#include <stdexcept>
#include <string>

namespace dfamin {

Dfa::Dfa(Alphabet alphabet, State n_states, State init,
         std::vector<State> delta, std::set<State> final)
    : alphabet_(std::move(alphabet)),
      n_states_(n_states),
      init_(init),
      delta_(std::move(delta)),
      final_(std::move(final)) {
    if (n_states_ == 0) throw std::invalid_argument("dfa needs at least one state");
    if (init_ >= n_states_) throw std::invalid_argument("initial state out of range");
    if (delta_.size() != static_cast<std::size_t>(n_states_) * alphabet_.size())
        throw std::invalid_argument("transition table is not total");
    for (State q : delta_)
        if (q >= n_states_) throw std::invalid_argument("transition target out of range");
    for (State q : final_)
        if (q >= n_states_) throw std::invalid_argument("final state out of range");
}

Dfa Dfa::trivial_accepting(Alphabet alphabet) {
    std::vector<State> delta(alphabet.size(), 0);
    return Dfa(std::move(alphabet), 1, 0, std::move(delta), {0});
}

Dfa Dfa::with_init_zero() const {
    if (init_ == 0) return *this;
    auto rename = [this](State q) -> State {
        if (q == init_) return 0;
        if (q == 0) return init_;
        return q;
    };
    std::vector<State> delta(delta_.size());
    for (State q = 0; q < n_states_; ++q)
        for (Symbol a = 0; a < sigma(); ++a)
            delta[rename(q) * sigma() + a] = rename(next(q, a));
    std::set<State> final;
    for (State q : final_) final.insert(rename(q));
    return Dfa(alphabet_, n_states_, 0, std::move(delta), std::move(final));
}

State delta_star(const Dfa& dfa, State from, const Word& w) {
    if (from >= dfa.n_states()) throw std::invalid_argument("source state out of range");
    State q = from;
    for (Symbol a : w) {
        if (a >= dfa.sigma())
            throw std::invalid_argument("word symbol " + std::to_string(a) +
                                        " outside alphabet of size " +
                                        std::to_string(dfa.sigma()));
        q = dfa.next(q, a);
    }
    return q;
}

bool accepts(const Dfa& dfa, const Word& w) {
    return dfa.is_final(delta_star(dfa, dfa.init(), w));
}

} // namespace dfamin
