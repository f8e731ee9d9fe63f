#pragma once

// Extremal non-overlap densities over a fixed alphabet.
//
// exhaustive_gamma enumerates every m-subset of Omega^n in colex order and
// keeps the exact maximum of mu(U(A)); the combination space is partitioned
// by colex rank across workers and the partial results are merged in rank
// order, so the outcome is independent of scheduling.  greedy_gamma is a
// seeded lower-bound heuristic (greedy growth plus first-improvement swaps).
// Both report witnesses: all argmax sets, or the lexicographically first 16
// when there are more.
//
// gamma_n2_formula evaluates the closed n=2 curve max{(1-a)^2, 1 - sqrt(a)}.
// Which branch wins is decided exactly: with u = sqrt(a) in (0,1),
// (1-a)^2 - (1-u) = u(u-1)(u^2+u-1), which is >= 0 iff u^2 <= (1-a)^2, i.e.
// iff a <= (1-a)^2, a rational comparison even when u is irrational.

#include <nonoverlap/errors.hpp>
#include <nonoverlap/overlap.hpp>
#include <nonoverlap/parallel.hpp>
#include <nonoverlap/word_set.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace nonoverlap {

inline constexpr std::uint64_t kEnumerationBudget = 100000000;  // subsets
inline constexpr std::size_t kWitnessCap = 16;

namespace detail {

/// C(n, k), capped: any value past cap comes back as cap + 1.
inline std::uint64_t binom_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // prefix products are binomials, division exact
        if (r > cap) return cap + 1;
    }
    return r.convert_to<std::uint64_t>();
}

/// Largest v <= hi with C(v, i) <= r.
inline std::uint64_t colex_digit(std::uint64_t r, std::uint64_t i, std::uint64_t hi,
                                 std::uint64_t cap) {
    std::uint64_t lo = i - 1;  // C(i-1, i) = 0 <= r
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (binom_capped(mid, i, cap) <= r) lo = mid;
        else hi = mid - 1;
    }
    return lo;
}

/// Combination with colex rank r: rank = sum_i C(comb[i], i+1).
inline std::vector<std::uint32_t> colex_unrank(std::uint64_t r, unsigned m, std::uint64_t size,
                                               std::uint64_t cap) {
    std::vector<std::uint32_t> comb(m);
    std::uint64_t hi = size - 1;
    for (unsigned i = m; i >= 1; --i) {
        const std::uint64_t v = colex_digit(r, i, hi, cap);
        comb[i - 1] = static_cast<std::uint32_t>(v);
        r -= binom_capped(v, i, cap);
        hi = v == 0 ? 0 : v - 1;
    }
    return comb;
}

/// Colex successor; false once comb is the last combination.
inline bool next_colex(std::vector<std::uint32_t>& comb, std::uint64_t size) {
    const std::size_t m = comb.size();
    for (std::size_t i = 0; i < m; ++i) {
        const std::uint64_t limit = i + 1 < m ? comb[i + 1] : size;
        if (comb[i] + 1ull < limit) {
            ++comb[i];
            for (std::size_t j = 0; j < i; ++j) comb[j] = static_cast<std::uint32_t>(j);
            return true;
        }
    }
    return false;
}

/// Bounded set of lexicographically smallest witness combinations.
struct WitnessPool {
    std::vector<std::vector<std::uint32_t>> combs;  // sorted, size <= kWitnessCap

    void offer(const std::vector<std::uint32_t>& c) {
        auto it = std::lower_bound(combs.begin(), combs.end(), c);
        if (it != combs.end() && *it == c) return;
        if (combs.size() == kWitnessCap) {
            if (it == combs.end()) return;
            combs.pop_back();
            it = std::lower_bound(combs.begin(), combs.end(), c);
        }
        combs.insert(it, c);
    }

    void merge(const WitnessPool& other) {
        for (const auto& c : other.combs) offer(c);
    }
};

inline std::uint64_t non_overlap_count(const WordSet& a) {
    WordSet covered = a;
    WordSet cur = a;
    for (unsigned j = 1; j < a.n(); ++j) {
        cur = shift_set(cur);
        covered = set_union(covered, lift_set(cur, a.n()));
    }
    return a.universe_size() - covered.count();
}

}  // namespace detail

struct SearchResult {
    unsigned q = 0, n = 0;
    std::uint64_t m = 0;
    Ratio best_mu_u;
    std::uint64_t best_count = 0;    // |U| at the optimum
    std::vector<WordSet> witnesses;  // lex-first argmax sets, at most 16
    std::uint64_t witness_total = 0; // number of argmax sets encountered
    std::uint64_t explored = 0;      // subsets examined / U evaluations
};

inline SearchResult exhaustive_gamma(unsigned q, unsigned n, std::uint64_t m,
                                     unsigned workers = 1) {
    const std::uint64_t size = checked_universe(q, n);
    if (m < 1 || m >= size)
        throw std::invalid_argument("subset size must lie in [1, q^n - 1]");
    const std::uint64_t total = detail::binom_capped(size, m, kEnumerationBudget);
    if (total > kEnumerationBudget) {
        const std::uint64_t wide = detail::binom_capped(size, m, std::uint64_t(1) << 62);
        const std::string spelled =
            wide > (std::uint64_t(1) << 62) ? "more than 2^62" : std::to_string(wide);
        throw capacity_error("search space C(" + std::to_string(size) + ", " +
                             std::to_string(m) + ") = " + spelled +
                             " subsets exceeds the enumeration budget of " +
                             std::to_string(kEnumerationBudget));
    }

    struct Chunk {
        std::uint64_t best = 0;  // best |U| + 1; 0 = empty chunk
        std::uint64_t ties = 0;
        detail::WitnessPool pool;
    };
    const std::vector<Chunk> parts = run_chunks<Chunk>(
        total, workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
            Chunk c;
            if (begin == end) return c;
            std::vector<std::uint32_t> comb = detail::colex_unrank(begin, m, size, total);
            for (std::uint64_t r = begin; r < end; ++r) {
                WordSet a(q, n);
                for (std::uint32_t x : comb) a.add(x);
                const std::uint64_t u = detail::non_overlap_count(a) + 1;
                if (u > c.best) {
                    c.best = u;
                    c.ties = 1;
                    c.pool.combs.clear();
                    c.pool.offer(comb);
                } else if (u == c.best) {
                    ++c.ties;
                    c.pool.offer(comb);
                }
                if (r + 1 < end) detail::next_colex(comb, size);
            }
            return c;
        });

    Chunk merged;
    for (const Chunk& c : parts) {
        if (c.best > merged.best) {
            merged.best = c.best;
            merged.ties = c.ties;
            merged.pool = c.pool;
        } else if (c.best == merged.best && c.best > 0) {
            merged.ties += c.ties;
            merged.pool.merge(c.pool);
        }
    }

    SearchResult res;
    res.q = q;
    res.n = n;
    res.m = m;
    res.best_count = merged.best - 1;
    res.best_mu_u = Ratio(BigInt(res.best_count), ipow(BigInt(q), n));
    res.witness_total = merged.ties;
    res.explored = total;
    for (const auto& comb : merged.pool.combs) {
        WordSet a(q, n);
        for (std::uint32_t x : comb) a.add(x);
        res.witnesses.push_back(std::move(a));
    }
    return res;
}

/// Seeded greedy lower bound: grow A one word at a time, always keeping
/// mu(U) maximal, then apply first-improvement single-element swaps until a
/// local optimum.  Restart order and tie-breaks are shuffled per restart;
/// identical seeds give identical results.
inline SearchResult greedy_gamma(unsigned q, unsigned n, std::uint64_t m, unsigned restarts,
                                 std::uint64_t seed) {
    const std::uint64_t size = checked_universe(q, n);
    if (m < 1 || m >= size)
        throw std::invalid_argument("subset size must lie in [1, q^n - 1]");
    if (restarts == 0) throw std::invalid_argument("need at least one restart");

    SearchResult res;
    res.q = q;
    res.n = n;
    res.m = m;
    std::uint64_t best = 0;                              // best |U| + 1
    std::vector<std::vector<std::uint32_t>> best_sets;   // distinct argmax sets, sorted

    std::vector<std::uint32_t> order(size);
    for (unsigned t = 0; t < restarts; ++t) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * (t + 1));
        std::iota(order.begin(), order.end(), 0u);
        for (std::uint64_t i = size; i-- > 1;)
            std::swap(order[i], order[bounded_draw(rng, i + 1)]);

        WordSet a(q, n);
        std::uint64_t ucount = 0;
        for (std::uint64_t step = 0; step < m; ++step) {
            std::uint32_t pick = 0;
            std::uint64_t pick_u = 0;
            bool have = false;
            for (std::uint32_t cand : order) {
                if (a.contains(cand)) continue;
                WordSet trial = a;
                trial.add(cand);
                const std::uint64_t u = detail::non_overlap_count(trial);
                ++res.explored;
                if (!have || u > pick_u) {
                    have = true;
                    pick = cand;
                    pick_u = u;
                }
            }
            a.add(pick);
            ucount = pick_u;
        }

        for (bool improved = true; improved;) {
            improved = false;
            for (std::uint32_t out : order) {
                if (!a.contains(out)) continue;
                for (std::uint32_t in : order) {
                    if (a.contains(in)) continue;
                    WordSet trial(q, n);
                    a.for_each_member([&](std::uint64_t x) {
                        if (x != out) trial.add(x);
                    });
                    trial.add(in);
                    const std::uint64_t u = detail::non_overlap_count(trial);
                    ++res.explored;
                    if (u > ucount) {
                        a = std::move(trial);
                        ucount = u;
                        improved = true;
                        break;
                    }
                }
                if (improved) break;
            }
        }

        std::vector<std::uint32_t> comb;
        comb.reserve(m);
        a.for_each_member([&](std::uint64_t x) { comb.push_back(static_cast<std::uint32_t>(x)); });
        if (ucount + 1 > best) {
            best = ucount + 1;
            best_sets.assign(1, comb);
        } else if (ucount + 1 == best) {
            auto it = std::lower_bound(best_sets.begin(), best_sets.end(), comb);
            if (it == best_sets.end() || *it != comb) best_sets.insert(it, comb);
        }
    }

    res.best_count = best - 1;
    res.best_mu_u = Ratio(BigInt(res.best_count), ipow(BigInt(q), n));
    res.witness_total = best_sets.size();
    for (std::size_t i = 0; i < best_sets.size() && i < kWitnessCap; ++i) {
        WordSet a(q, n);
        for (std::uint32_t x : best_sets[i]) a.add(x);
        res.witnesses.push_back(std::move(a));
    }
    return res;
}

struct GammaTwo {
    Ratio product_branch;          // (1 - alpha)^2, always exact
    bool sqrt_rational = false;    // sqrt(alpha) is rational
    Ratio sqrt_branch;             // 1 - sqrt(alpha); meaningful iff sqrt_rational
    double sqrt_branch_value = 0;  // float value of the sqrt branch, always
    bool product_attains = false;  // the product branch is the max
    bool exact = false;            // `value` holds the max exactly
    Ratio value;                   // set iff exact
    double approx = 0;             // max of the two branches as float
};

inline GammaTwo gamma_n2_formula(const Ratio& alpha) {
    if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("alpha must lie in (0,1)");
    GammaTwo g;
    g.product_branch = rpow(1 - alpha, 2);
    Ratio root;
    g.sqrt_rational = exact_sqrt(alpha, root);
    if (g.sqrt_rational) {
        g.sqrt_branch = 1 - root;
        g.sqrt_branch_value = to_double(g.sqrt_branch);
    } else {
        g.sqrt_branch_value = 1 - std::sqrt(to_double(alpha));
    }
    g.product_attains = alpha <= g.product_branch;
    g.exact = g.product_attains || g.sqrt_rational;
    if (g.product_attains)
        g.value = g.product_branch;
    else if (g.sqrt_rational)
        g.value = g.sqrt_branch;
    g.approx = g.product_attains ? to_double(g.product_branch) : g.sqrt_branch_value;
    return g;
}

}  // namespace nonoverlap
