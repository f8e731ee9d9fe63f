#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nonoverlap {

/// A word over the alphabet {0, ..., q-1}, first symbol most significant.
struct Word {
    unsigned q = 2;
    std::vector<unsigned> symbols;

    unsigned length() const { return static_cast<unsigned>(symbols.size()); }
};

inline void validate_word(const Word& w) {
    if (w.q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (w.symbols.empty()) throw std::invalid_argument("word must be nonempty");
    for (unsigned s : w.symbols)
        if (s >= w.q)
            throw std::invalid_argument("symbol " + std::to_string(s) +
                                        " out of range for alphabet size " + std::to_string(w.q));
}

/// Position of w in the lexicographic enumeration of {0..q-1}^n.
inline std::uint64_t encode_word(const Word& w) {
    validate_word(w);
    std::uint64_t x = 0;
    for (unsigned s : w.symbols) {
        if (x > (UINT64_MAX - s) / w.q) throw std::overflow_error("word index exceeds 64 bits");
        x = x * w.q + s;
    }
    return x;
}

inline Word decode_word(std::uint64_t index, unsigned q, unsigned n) {
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (n == 0) throw std::invalid_argument("word length must be positive");
    Word w;
    w.q = q;
    w.symbols.assign(n, 0);
    for (unsigned i = n; i-- > 0;) {
        w.symbols[i] = static_cast<unsigned>(index % q);
        index /= q;
    }
    if (index != 0) throw std::out_of_range("index out of range for q^n words");
    return w;
}

/// True when some suffix of w equals the same-length prefix of u.
/// Both words must agree in alphabet and length; the full-length case
/// (suffix = all of w) makes every word overlap itself.
inline bool overlaps_pair(const Word& w, const Word& u) {
    validate_word(w);
    validate_word(u);
    if (w.q != u.q || w.symbols.size() != u.symbols.size())
        throw std::invalid_argument("overlap is defined for words of equal alphabet and length");
    const unsigned n = w.length();
    for (unsigned j = 1; j <= n; ++j) {
        bool match = true;
        for (unsigned i = 0; i < j && match; ++i) match = w.symbols[n - j + i] == u.symbols[i];
        if (match) return true;
    }
    return false;
}

/// Digits glued together for q <= 10, comma-separated otherwise.
inline std::string format_word(const Word& w) {
    validate_word(w);
    std::string out;
    for (std::size_t i = 0; i < w.symbols.size(); ++i) {
        if (w.q > 10 && i) out += ',';
        out += std::to_string(w.symbols[i]);
    }
    return out;
}

}  // namespace nonoverlap
