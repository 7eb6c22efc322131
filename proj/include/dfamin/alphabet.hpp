#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dfamin {

using Symbol = std::uint32_t;

/// A word is a sequence of symbol indices; the empty sequence is epsilon.
using Word = std::vector<Symbol>;

/// Ordered, duplicate-free list of symbol names. Operations work on symbol
/// indices 0..size()-1; names only matter for I/O. Two alphabets are
/// operationally compatible when they have the same size.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> names);

    /// Alphabet with names "0", "1", ..., as used by sample files.
    static Alphabet indexed(std::size_t size);
    /// The two-letter alphabet {a, b}.
    static Alphabet ab();

    std::size_t size() const { return names_.size(); }
    const std::string& name(Symbol s) const { return names_.at(s); }
    const std::vector<std::string>& names() const { return names_; }

    bool compatible_with(const Alphabet& other) const { return size() == other.size(); }

    bool operator==(const Alphabet& other) const = default;

    /// Renders a word with this alphabet's names, "" for epsilon.
    std::string format(const Word& w) const;

private:
    std::vector<std::string> names_;
};

/// True iff every symbol index of w is valid for an alphabet of size sigma.
bool word_valid(const Word& w, std::size_t sigma);

/// Length-lexicographic order (shorter first, then symbol-wise).
bool length_lex_less(const Word& a, const Word& b);

} // namespace dfamin
