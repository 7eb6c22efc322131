#include "dfamin/alphabet.hpp"

#include <set>
#include <stdexcept>

namespace dfamin {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("alphabet must be non-empty");
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size())
        throw std::invalid_argument("alphabet has duplicate symbols");
}

Alphabet Alphabet::indexed(std::size_t size) {
    std::vector<std::string> names;
    names.reserve(size);
    for (std::size_t i = 0; i < size; ++i) names.push_back(std::to_string(i));
    return Alphabet(std::move(names));
}

Alphabet Alphabet::ab() { return Alphabet({"a", "b"}); }

std::string Alphabet::format(const Word& w) const {
    std::string out;
    for (Symbol s : w) out += name(s);
    return out;
}

bool word_valid(const Word& w, std::size_t sigma) {
    for (Symbol s : w)
        if (s >= sigma) return false;
    return true;
}

bool length_lex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

} // namespace dfamin
