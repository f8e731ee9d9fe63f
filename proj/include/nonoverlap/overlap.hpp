#pragma once

// Non-overlap sets.
//
// A word w overlaps u (ordered) when some suffix of w equals the same-length
// prefix of u.  For a set A of words of length n, the words that no member of
// A overlaps are
//
//   U(A) = Omega^n \ union_{j=0}^{n-1}  s^j(A) x Omega^j,
//
// where s drops the first symbol.  Three routes to U(A) live here:
//
//   non_overlap_bruteforce   evaluates the displayed union directly;
//   non_overlap_incremental  grows B_1 <= B_2 <= ... <= B_n over word lengths
//                            1..n (B_j = union_{i<=j} s^(n-i)(A) x Omega^(j-i))
//                            and returns the whole ladder, U = ~B_n;
//   non_overlap_blocked      the same union restricted to shifts by whole
//                            blocks of g symbols (g | n); g = 1 is bruteforce.
//
// coverage_counts tallies, per word w, how many of the n union terms contain
// w; the count is 0 exactly on U(A).

#include <nonoverlap/word_set.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nonoverlap {

/// Shift ladder A_j = s^(n-j)(A), j = 1..n; result[j-1] = A_j.
inline std::vector<WordSet> shift_ladder(const WordSet& a) {
    std::vector<WordSet> ladder;
    ladder.reserve(a.n());
    ladder.push_back(a);
    for (unsigned j = a.n(); j-- > 1;) ladder.push_back(shift_set(ladder.back()));
    return {ladder.rbegin(), ladder.rend()};
}

/// U over the block alphabet: only shifts by multiples of g enter the union.
/// Requires g >= 1 and g | n.  With g = 1 this is U(A) itself.
inline WordSet non_overlap_blocked(const WordSet& a, unsigned g) {
    if (g == 0 || a.n() % g != 0)
        throw std::invalid_argument("block size must divide the word length");
    WordSet covered = a;
    WordSet cur = a;
    for (unsigned b = 1; b < a.n() / g; ++b) {
        cur = shift_iterate(cur, g);
        covered = set_union(covered, lift_set(cur, a.n()));
    }
    return set_complement(covered);
}

inline WordSet non_overlap_bruteforce(const WordSet& a) { return non_overlap_blocked(a, 1); }

struct IncrementalResult {
    WordSet u;                  // U(A)
    std::vector<WordSet> b_seq; // b_seq[j-1] = B_j over Omega^j, j = 1..n
};

inline IncrementalResult non_overlap_incremental(const WordSet& a) {
    const std::vector<WordSet> a_seq = shift_ladder(a);
    std::vector<WordSet> b_seq;
    b_seq.reserve(a.n());
    b_seq.push_back(a_seq[0]);
    for (unsigned j = 2; j <= a.n(); ++j)
        b_seq.push_back(set_union(lift_set(b_seq.back(), j), a_seq[j - 1]));
    WordSet u = set_complement(b_seq.back());
    return {std::move(u), std::move(b_seq)};
}

struct CoverageProfile {
    unsigned q = 0, n = 0;
    Ratio alpha;                 // density of the covering set A
    std::vector<std::uint8_t> f; // f[x] = #{ j in [0,n) : x in s^j(A) x Omega^j }
};

inline CoverageProfile coverage_counts(const WordSet& a) {
    CoverageProfile p;
    p.q = a.q();
    p.n = a.n();
    p.alpha = a.measure();
    p.f.assign(a.universe_size(), 0);
    WordSet cur = a;
    for (unsigned j = 0; j < a.n(); ++j) {
        if (j > 0) cur = shift_set(cur);
        const WordSet term = lift_set(cur, a.n());
        term.for_each_member([&](std::uint64_t x) { ++p.f[x]; });
    }
    return p;
}

}  // namespace nonoverlap
