#pragma once

// Plain-text word-set files.
//
//   # optional comments
//   q=3 n=4
//   0012
//   2101
//
// One word per line after the header.  For q <= 10 a word is n digits with no
// separators; for q > 10 it is n comma-separated symbol values.  Blank lines
// and lines starting with '#' are ignored everywhere.  Errors carry 1-based
// line numbers.

#include <nonoverlap/errors.hpp>
#include <nonoverlap/word.hpp>
#include <nonoverlap/word_set.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace nonoverlap {

namespace detail {

inline std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline bool skippable(const std::string& line) {
    return line.empty() || line[0] == '#';
}

inline unsigned parse_uint(const std::string& tok, std::size_t line, const char* what) {
    if (tok.empty()) throw parse_error(line, std::string("empty ") + what);
    unsigned long v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9')
            throw parse_error(line, std::string("invalid ") + what + " '" + tok + "'");
        v = v * 10 + static_cast<unsigned long>(c - '0');
        if (v > 1u << 30) throw parse_error(line, std::string(what) + " out of range");
    }
    return static_cast<unsigned>(v);
}

}  // namespace detail

inline WordSet read_word_set(std::istream& in) {
    std::string raw;
    std::size_t lineno = 0;

    unsigned q = 0, n = 0;
    bool have_header = false;
    while (!have_header && std::getline(in, raw)) {
        ++lineno;
        const std::string line = detail::strip(raw);
        if (detail::skippable(line)) continue;
        std::istringstream hs(line);
        std::string qtok, ntok, extra;
        hs >> qtok >> ntok;
        if (hs >> extra || qtok.rfind("q=", 0) != 0 || ntok.rfind("n=", 0) != 0)
            throw parse_error(lineno, "expected header 'q=<int> n=<int>', got '" + line + "'");
        q = detail::parse_uint(qtok.substr(2), lineno, "alphabet size");
        n = detail::parse_uint(ntok.substr(2), lineno, "word length");
        if (q < 2) throw parse_error(lineno, "alphabet size must be at least 2");
        if (n == 0) throw parse_error(lineno, "word length must be positive");
        have_header = true;
    }
    if (!have_header) throw parse_error(lineno ? lineno : 1, "missing 'q= n=' header");

    WordSet s(q, n);
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = detail::strip(raw);
        if (detail::skippable(line)) continue;

        Word w;
        w.q = q;
        if (q <= 10) {
            if (line.size() != n)
                throw parse_error(lineno, "expected " + std::to_string(n) + " digits, got '" +
                                              line + "'");
            for (char c : line) {
                if (c < '0' || c > '9') throw parse_error(lineno, "invalid digit in word");
                w.symbols.push_back(static_cast<unsigned>(c - '0'));
            }
        } else {
            std::istringstream ws(line);
            std::string tok;
            while (std::getline(ws, tok, ','))
                w.symbols.push_back(detail::parse_uint(detail::strip(tok), lineno, "symbol"));
            if (w.symbols.size() != n)
                throw parse_error(lineno, "expected " + std::to_string(n) + " symbols, got " +
                                              std::to_string(w.symbols.size()));
        }
        for (unsigned sym : w.symbols)
            if (sym >= q)
                throw parse_error(lineno, "symbol " + std::to_string(sym) +
                                              " out of range for alphabet size " +
                                              std::to_string(q));
        s.add(encode_word(w));
    }
    return s;
}

inline WordSet read_word_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_word_set(in);
}

inline void write_word_set(std::ostream& out, const WordSet& s) {
    out << "q=" << s.q() << " n=" << s.n() << "\n";
    s.for_each_member(
        [&](std::uint64_t x) { out << format_word(decode_word(x, s.q(), s.n())) << "\n"; });
}

}  // namespace nonoverlap
