#pragma once

// Product families A = Omega^(n-k) x S^k and their exact/asymptotic analysis.
//
// With p = s/q and S = {0..s-1}, a word avoids overlap by A exactly when its
// first symbol is outside S and its remaining n-1 symbols contain no run of k
// consecutive S-symbols, so
//
//   mu(U(A)) = (1 - p) * Pr[R_{n-1} < k],
//
// where R_m is the longest success run in m Bernoulli(p) trials.  The run
// counts N(m) obey the generalized Fibonacci recurrence
//
//   N(m) = q^m                                   (m < k)
//   N(k) = q^k - s^k
//   N(m) = q N(m-1) - (q-s) s^k N(m-k-1)         (m > k)
//
// and Pr[R_m < k] = N(m) / q^m.  The same recurrence runs in probability form
// for arbitrary rational or floating p; the float variant is O(m) time and
// O(k) space, which is what the large-n scans use.

#include <nonoverlap/errors.hpp>
#include <nonoverlap/ratio.hpp>
#include <nonoverlap/word_set.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nonoverlap {

struct ProductFamilySpec {
    unsigned q = 2;  // alphabet size
    unsigned s = 1;  // |S|, 0 < s < q
    unsigned n = 1;  // word length
    unsigned k = 1;  // suffix block length, 1 <= k <= n

    Ratio p() const { return Ratio(s, q); }
    Ratio alpha() const { return rpow(p(), k); }
};

inline void validate_family(const ProductFamilySpec& f) {
    if (f.q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (f.s == 0 || f.s >= f.q) throw std::invalid_argument("need 0 < s < q");
    if (f.k == 0 || f.k > f.n) throw std::invalid_argument("need 1 <= k <= n");
}

/// Membership table of Omega^(n-k) x S^k; mu = (s/q)^k.
inline WordSet product_family(const ProductFamilySpec& f) {
    validate_family(f);
    WordSet a(f.q, f.n);
    std::uint64_t qk = 1, sk = 1;
    for (unsigned i = 0; i < f.k; ++i) {
        qk *= f.q;
        sk *= f.s;
    }
    const std::uint64_t prefixes = a.universe_size() / qk;
    for (std::uint64_t tail = 0; tail < sk; ++tail) {
        // digits of tail in base s, re-read in base q
        std::uint64_t y = 0, rest = tail, place = 1;
        for (unsigned i = 0; i < f.k; ++i) {
            y += (rest % f.s) * place;
            rest /= f.s;
            place *= f.q;
        }
        for (std::uint64_t pre = 0; pre < prefixes; ++pre) a.add(pre * qk + y);
    }
    return a;
}

/// N(0..m): words over Omega with no k consecutive S-symbols, exact.
inline std::vector<BigInt> no_run_count_table(std::uint64_t m, unsigned k, unsigned q, unsigned s) {
    if (k == 0) throw std::invalid_argument("run threshold must be positive");
    if (q < 2 || s > q) throw std::invalid_argument("need q >= 2 and s <= q");
    std::vector<BigInt> table(m + 1);
    const BigInt coeff = BigInt(q - s) * ipow(BigInt(s), k);
    for (std::uint64_t j = 0; j <= m; ++j) {
        if (j < k)
            table[j] = ipow(BigInt(q), static_cast<unsigned>(j));
        else if (j == k)
            table[j] = ipow(BigInt(q), k) - ipow(BigInt(s), k);
        else
            table[j] = q * table[j - 1] - coeff * table[j - k - 1];
    }
    return table;
}

inline BigInt no_run_count(std::uint64_t m, unsigned k, unsigned q, unsigned s) {
    return no_run_count_table(m, k, q, s).back();
}

struct RunDistribution {
    std::uint64_t m = 0;
    unsigned k = 0;
    Ratio p;            // success probability s/q
    BigInt count;       // N(m)
    Ratio prob_no_run;  // Pr[R_m < k] = N(m)/q^m
};

inline RunDistribution run_distribution(std::uint64_t m, unsigned k, unsigned q, unsigned s) {
    RunDistribution d;
    d.m = m;
    d.k = k;
    d.p = Ratio(s, q);
    d.count = no_run_count(m, k, q, s);
    d.prob_no_run = Ratio(d.count, ipow(BigInt(q), static_cast<unsigned>(m)));
    return d;
}

/// Pr[R_j < k] for j = 0..m at arbitrary rational p, exact.
inline std::vector<Ratio> prob_no_run_table(std::uint64_t m, unsigned k, const Ratio& p) {
    if (k == 0) throw std::invalid_argument("run threshold must be positive");
    if (p < 0 || p > 1) throw std::invalid_argument("probability out of [0,1]");
    std::vector<Ratio> table(m + 1, Ratio(1));
    const Ratio pk = rpow(p, k);
    const Ratio coeff = (1 - p) * pk;
    if (m >= k) table[k] = 1 - pk;
    for (std::uint64_t j = k + 1; j <= m; ++j)
        table[j] = table[j - 1] - coeff * table[j - k - 1];
    return table;
}

/// Pr[R_m < k], exact, O(k) memory.
inline Ratio prob_no_run_exact(std::uint64_t m, unsigned k, const Ratio& p) {
    if (k == 0) throw std::invalid_argument("run threshold must be positive");
    if (p < 0 || p > 1) throw std::invalid_argument("probability out of [0,1]");
    if (m < k) return Ratio(1);
    const Ratio pk = rpow(p, k);
    const Ratio coeff = (1 - p) * pk;
    std::vector<Ratio> win(k + 1, Ratio(1));  // win[j mod (k+1)] holds Pr[R_j < k]
    win[k % (k + 1)] = 1 - pk;
    for (std::uint64_t j = k + 1; j <= m; ++j) {
        const std::size_t slot = j % (k + 1);  // currently holds j - k - 1
        win[slot] = win[(j - 1) % (k + 1)] - coeff * win[slot];
    }
    return win[m % (k + 1)];
}

/// Float twin of prob_no_run_exact; pass pk when p^k is known exactly
/// (the asymptotic scans solve p from p^k = alpha, so alpha is exact).
inline double prob_no_run_float(std::uint64_t m, unsigned k, double p, double pk) {
    if (k == 0) throw std::invalid_argument("run threshold must be positive");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability out of [0,1]");
    if (m < k) return 1.0;
    const double coeff = (1 - p) * pk;
    std::vector<double> win(k + 1, 1.0);
    win[k % (k + 1)] = 1 - pk;
    for (std::uint64_t j = k + 1; j <= m; ++j) {
        const std::size_t slot = j % (k + 1);
        win[slot] = win[(j - 1) % (k + 1)] - coeff * win[slot];
    }
    return win[m % (k + 1)];
}

inline double prob_no_run_float(std::uint64_t m, unsigned k, double p) {
    return prob_no_run_float(m, k, p, std::pow(p, static_cast<double>(k)));
}

/// mu(U) for the product family, closed form: (1 - s/q) N(n-1) / q^(n-1).
inline Ratio closed_form_mu_u(const ProductFamilySpec& f) {
    validate_family(f);
    return Ratio(f.q - f.s, f.q) * Ratio(no_run_count(f.n - 1, f.k, f.q, f.s),
                                         ipow(BigInt(f.q), f.n - 1));
}

struct PoissonEstimate {
    double lambda = 0;       // p^k ((n-2)(1-p) + 1)
    double approx = 0;       // e^{-lambda}, estimate of Pr[R_{n-1} < k]
    double error_bound = 0;  // lambda (2k+1)/(n-1) + 2 p^k
};

inline PoissonEstimate poisson_estimate(std::uint64_t n, unsigned k, double p) {
    if (n < 2) throw std::invalid_argument("Poisson estimate needs n >= 2");
    if (k == 0) throw std::invalid_argument("run threshold must be positive");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("probability out of (0,1)");
    PoissonEstimate e;
    const double pk = std::pow(p, static_cast<double>(k));
    e.lambda = pk * (static_cast<double>(n - 2) * (1 - p) + 1);
    e.approx = std::exp(-e.lambda);
    e.error_bound = e.lambda * (2.0 * k + 1) / static_cast<double>(n - 1) + 2 * pk;
    return e;
}

enum class RoundMode { nearest, floor };

/// k = [n alpha ln(1/alpha)], clamped to [1, n].
inline unsigned optimal_k(std::uint64_t n, double alpha, RoundMode mode = RoundMode::nearest) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
    const double v = static_cast<double>(n) * alpha * std::log(1.0 / alpha);
    double k = mode == RoundMode::nearest ? std::llround(v) : std::floor(v);
    if (k < 1) k = 1;
    if (k > static_cast<double>(n)) k = static_cast<double>(n);
    return static_cast<unsigned>(k);
}

/// alpha n mu(U) for given (k, p) with alpha = pk.
inline double asymptotic_value(std::uint64_t n, unsigned k, double p, double pk) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    return pk * static_cast<double>(n) * (1 - p) * prob_no_run_float(n - 1, k, p, pk);
}

/// alpha n mu(U) for the family at k = optimal_k(n, alpha), p = alpha^(1/k).
inline double asymptotic_scan(std::uint64_t n, double alpha, RoundMode mode = RoundMode::nearest) {
    const unsigned k = optimal_k(n, alpha, mode);
    const double p = std::exp(std::log(alpha) / k);
    return asymptotic_value(n, k, p, alpha);
}

}  // namespace nonoverlap
