#pragma once

// Naive reference implementations used to cross-check the library.  Everything
// here works on explicit digit vectors and deliberately shares no set or index
// arithmetic with the bit-table code under test.

#include <nonoverlap/word.hpp>
#include <nonoverlap/word_set.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using nonoverlap::WordSet;

/// Digits of x in base q, most significant first.
inline std::vector<unsigned> digits_of(std::uint64_t x, unsigned q, unsigned n) {
    std::vector<unsigned> d(n);
    for (unsigned i = n; i-- > 0;) {
        d[i] = static_cast<unsigned>(x % q);
        x /= q;
    }
    return d;
}

inline bool suffix_matches_prefix(const std::vector<unsigned>& w, const std::vector<unsigned>& u,
                                  std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
        if (w[w.size() - len + i] != u[i]) return false;
    return true;
}

/// Some suffix of w equals the same-length prefix of u (lengths 1..n).
inline bool overlaps(const std::vector<unsigned>& w, const std::vector<unsigned>& u) {
    for (std::size_t len = 1; len <= w.size(); ++len)
        if (suffix_matches_prefix(w, u, len)) return true;
    return false;
}

/// Indices of U(A), computed by the double loop over words.
inline std::vector<std::uint64_t> u_indices(const WordSet& a) {
    std::vector<std::vector<unsigned>> members;
    a.for_each_member(
        [&](std::uint64_t x) { members.push_back(digits_of(x, a.q(), a.n())); });
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < a.universe_size(); ++x) {
        const std::vector<unsigned> u = digits_of(x, a.q(), a.n());
        bool covered = false;
        for (const auto& w : members)
            if (overlaps(w, u)) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(x);
    }
    return out;
}

/// Coverage counts: f[x] = number of lengths len in [1, n] such that some
/// member of A has its length-len suffix equal to the length-len prefix of x.
inline std::vector<unsigned> coverage(const WordSet& a) {
    std::vector<std::vector<unsigned>> members;
    a.for_each_member(
        [&](std::uint64_t x) { members.push_back(digits_of(x, a.q(), a.n())); });
    std::vector<unsigned> f(a.universe_size(), 0);
    for (std::uint64_t x = 0; x < a.universe_size(); ++x) {
        const std::vector<unsigned> u = digits_of(x, a.q(), a.n());
        for (std::size_t len = 1; len <= a.n(); ++len) {
            bool hit = false;
            for (const auto& w : members)
                if (suffix_matches_prefix(w, u, len)) {
                    hit = true;
                    break;
                }
            f[x] += hit;
        }
    }
    return f;
}

/// {w[1:] : w in A} as sorted indices over Omega^(n-1).
inline std::vector<std::uint64_t> shift_indices(const WordSet& a) {
    std::set<std::uint64_t> out;
    a.for_each_member([&](std::uint64_t x) {
        std::vector<unsigned> d = digits_of(x, a.q(), a.n());
        std::uint64_t y = 0;
        for (std::size_t i = 1; i < d.size(); ++i) y = y * a.q() + d[i];
        out.insert(y);
    });
    return {out.begin(), out.end()};
}

/// A x Omega^(j - n) as sorted indices over Omega^j.
inline std::vector<std::uint64_t> lift_indices(const WordSet& a, unsigned j) {
    std::uint64_t factor = 1;
    for (unsigned i = a.n(); i < j; ++i) factor *= a.q();
    std::vector<std::uint64_t> out;
    a.for_each_member([&](std::uint64_t x) {
        for (std::uint64_t t = 0; t < factor; ++t) out.push_back(x * factor + t);
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// Count words in Omega^m with no k consecutive symbols drawn from {0..s-1},
/// by direct enumeration of all q^m words.
inline std::uint64_t no_run_count_naive(unsigned m, unsigned k, unsigned q, unsigned s) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < m; ++i) total *= q;
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < total; ++x) {
        const std::vector<unsigned> d = digits_of(x, q, m);
        unsigned run = 0, longest = 0;
        for (unsigned v : d) {
            run = v < s ? run + 1 : 0;
            longest = std::max(longest, run);
        }
        count += longest < k;
    }
    return count;
}

/// A random proper nonempty subset with a deterministic member count.
inline WordSet random_proper_set(unsigned q, unsigned n, std::mt19937_64& rng) {
    const std::uint64_t size = nonoverlap::checked_universe(q, n);
    const std::uint64_t m = 1 + nonoverlap::bounded_draw(rng, size - 1);
    return nonoverlap::random_word_set(q, n, m, rng);
}

}  // namespace oracle
