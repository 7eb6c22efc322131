#include "dfamin/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dfamin/errors.hpp"

namespace dfamin {

using nlohmann::json;

Sample parse_sample_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty sample file", 1);
    std::istringstream head(line);
    std::size_t num_words = 0, sigma = 0;
    if (!(head >> num_words >> sigma) || sigma == 0)
        throw ParseError("expected header '<num_words> <alphabet_size>'", 1);

    std::vector<Word> words;
    words.reserve(num_words);
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() && words.size() == num_words) continue; // trailing blank
        std::istringstream row(line);
        std::size_t len = 0;
        if (!(row >> len)) {
            if (row.eof() && line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw ParseError("expected word length", lineno);
        }
        Word w;
        w.reserve(len);
        for (std::size_t i = 0; i < len; ++i) {
            long sym = -1;
            if (!(row >> sym)) throw ParseError("word shorter than declared length", lineno);
            if (sym < 0 || static_cast<std::size_t>(sym) >= sigma)
                throw ParseError("symbol " + std::to_string(sym) + " outside alphabet of size " +
                                     std::to_string(sigma),
                                 lineno);
            w.push_back(static_cast<Symbol>(sym));
        }
        long extra;
        if (row >> extra) throw ParseError("word longer than declared length", lineno);
        words.push_back(std::move(w));
    }
    if (words.size() != num_words)
        throw ParseError("header declares " + std::to_string(num_words) + " words, found " +
                         std::to_string(words.size()));
    return Sample(Alphabet::indexed(sigma), std::move(words));
}

std::string format_sample_text(const Sample& sample) {
    std::ostringstream out;
    out << sample.words().size() << ' ' << sample.sigma() << '\n';
    for (const Word& w : sample.words()) {
        out << w.size();
        for (Symbol s : w) out << ' ' << s;
        out << '\n';
    }
    return out.str();
}

Dfa parse_dfa_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    try {
        std::vector<std::string> names = doc.at("alphabet").get<std::vector<std::string>>();
        const State n = doc.at("states").get<State>();
        const State init = doc.at("init").get<State>();
        const auto& rows = doc.at("delta");
        if (!rows.is_array() || rows.size() != n)
            throw ParseError("delta must have one row per state");
        std::vector<State> delta;
        delta.reserve(std::size_t(n) * names.size());
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != names.size())
                throw ParseError("delta row length must equal alphabet size");
            for (const auto& cell : row) delta.push_back(cell.get<State>());
        }
        std::set<State> final;
        for (const auto& f : doc.at("final")) final.insert(f.get<State>());
        return Dfa(Alphabet(std::move(names)), n, init, std::move(delta), std::move(final));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad DFA document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid DFA: ") + e.what());
    }
}

std::string format_dfa_json(const Dfa& input) {
    Dfa dfa = input.with_init_zero();
    json doc;
    doc["alphabet"] = dfa.alphabet().names();
    doc["states"] = dfa.n_states();
    doc["init"] = 0;
    json rows = json::array();
    for (State q = 0; q < dfa.n_states(); ++q) {
        json row = json::array();
        for (Symbol a = 0; a < dfa.sigma(); ++a) row.push_back(dfa.next(q, a));
        rows.push_back(std::move(row));
    }
    doc["delta"] = std::move(rows);
    doc["final"] = std::vector<State>(dfa.final().begin(), dfa.final().end());
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + path);
}

Sample read_sample(const std::string& path) { return parse_sample_text(read_file(path)); }
void write_sample(const Sample& sample, const std::string& path) {
    write_file(path, format_sample_text(sample));
}
Dfa read_dfa(const std::string& path) { return parse_dfa_json(read_file(path)); }
void write_dfa(const Dfa& dfa, const std::string& path) {
    write_file(path, format_dfa_json(dfa));
}

} // namespace dfamin
