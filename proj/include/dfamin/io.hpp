#pragma once

#include <string>

#include "dfamin/dfa.hpp"
#include "dfamin/sample.hpp"

namespace dfamin {

/// Abbadingo-style sample text: line 1 "<num_words> <alphabet_size>", then
/// one word per line as "<len> <sym_0> ... <sym_{len-1}>" with integer
/// symbols; epsilon is a line "0". Parse errors carry the line number.
Sample parse_sample_text(const std::string& text);
std::string format_sample_text(const Sample& sample);

Sample read_sample(const std::string& path);
void write_sample(const Sample& sample, const std::string& path);

/// Canonical DFA JSON (.dfa.json): {"alphabet": [names...], "states": N,
/// "init": 0, "delta": [[...]...], "final": [...]}. Written DFAs always have
/// init 0 (states renamed if needed); readers accept any valid init and
/// reject non-total tables.
Dfa parse_dfa_json(const std::string& text);
std::string format_dfa_json(const Dfa& dfa);

Dfa read_dfa(const std::string& path);
void write_dfa(const Dfa& dfa, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace dfamin
