#pragma once

// Level-set estimate and its blocked-alphabet proof construction.
//
// f(w) counts how many of the n cylinder terms s^j(A) x Omega^j contain w.
// For t in [1, n/4] the measure of the level set {f <= t} is at most
// 4t/(alpha n).  The proof regroups symbols into blocks of 2t: with
// n~ = floor(n / 2t) and r = n - 2t n~, let w~ be the leading n - r symbols
// of w (the r trailing symbols are free) and form the 2t families
//
//   A~_i = s^(r+i)(A) x Omega^i          (i = 0..2t-1, over Omega^(2t n~)).
//
// w~ lies in the block-level cover s~^j(A~_i) x Omega~^j exactly when w lies
// in s^(r+i+2tj)(A) x Omega^(r+i+2tj), so distinct i claim shift indices in
// distinct residues mod 2t and the pointwise counting inequality
//
//   #{ i : w~ not in U~(A~_i) } <= f(w)
//
// follows, where U~ is the non-overlap set at block granularity (shifts by
// 2t base symbols).  Summing it over w gives t mu({f <= t}) <= sum_i
// mu(U~(A~_i)), and each U~ obeys the n = n~ density bound;
// verify_blocked_counting checks the pointwise inequality and the union
// chain exactly.
//
// The construction itself only needs n~ >= 1 (t <= n/2), which is exposed so
// the counting inequality can be exercised at the boundary; the measure bound
// keeps the corollary's hypothesis t <= n/4.

#include <nonoverlap/errors.hpp>
#include <nonoverlap/overlap.hpp>
#include <nonoverlap/word_set.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nonoverlap {

/// {w : f(w) <= t} as a set; no hypothesis checks, pure data.
inline WordSet level_set(const CoverageProfile& p, unsigned t) {
    WordSet s(p.q, p.n);
    for (std::uint64_t x = 0; x < p.f.size(); ++x)
        if (p.f[x] <= t) s.add(x);
    return s;
}

inline Ratio level_set_measure(const CoverageProfile& p, unsigned t) {
    std::uint64_t c = 0;
    for (std::uint8_t v : p.f) c += v <= t;
    return Ratio(BigInt(c), ipow(BigInt(p.q), p.n));
}

namespace detail {

inline void require_corollary_t(unsigned t, unsigned n) {
    if (t == 0 || 4 * t > n)
        throw hypothesis_error("t out of hypothesis [1, n/4] (t = " + std::to_string(t) +
                               ", n = " + std::to_string(n) + ")");
}

inline void require_proper_alpha(const WordSet& a) {
    if (a.count() == 0 || a.count() == a.universe_size())
        throw hypothesis_error("level-set estimate needs alpha in (0,1)");
}

}  // namespace detail

inline Ratio level_set_measure(const WordSet& a, unsigned t) {
    detail::require_corollary_t(t, a.n());
    detail::require_proper_alpha(a);
    return level_set_measure(coverage_counts(a), t);
}

struct CorollaryReport {
    unsigned q = 0, n = 0, t = 0;
    Ratio alpha;
    Ratio level_measure;  // mu({f <= t})
    Ratio bound;          // 4t / (alpha n)
    Ratio slack;          // bound - level_measure
    bool vacuous = false; // bound >= 1
    bool pass = false;

    // Remark level t* = floor(alpha n / 8): when alpha >= 1/n and t* >= 1,
    // at least half of Omega^n has f(w) > t*.
    bool remark_applicable = false;
    unsigned remark_t = 0;
    Ratio remark_measure;
    bool remark_pass = false;
};

inline CorollaryReport corollary_check(const WordSet& a, unsigned t) {
    detail::require_corollary_t(t, a.n());
    detail::require_proper_alpha(a);
    const CoverageProfile prof = coverage_counts(a);

    CorollaryReport r;
    r.q = a.q();
    r.n = a.n();
    r.t = t;
    r.alpha = prof.alpha;
    r.level_measure = level_set_measure(prof, t);
    r.bound = Ratio(4 * t) / (r.alpha * a.n());
    r.slack = r.bound - r.level_measure;
    r.vacuous = r.bound >= 1;
    r.pass = r.level_measure <= r.bound;

    const Ratio star = r.alpha * a.n() / 8;
    const BigInt star_floor = numerator(star) / denominator(star);
    r.remark_applicable = r.alpha >= Ratio(1, a.n()) && star_floor >= 1;
    if (r.remark_applicable) {
        r.remark_t = star_floor.convert_to<unsigned>();
        r.remark_measure = level_set_measure(prof, r.remark_t);
        r.remark_pass = r.remark_measure <= Ratio(1, 2);
    }
    return r;
}

struct BlockedFamilies {
    unsigned t = 0;
    unsigned n_tilde = 0;            // blocks per word
    unsigned r = 0;                  // dropped prefix length
    std::vector<WordSet> families;   // 2t sets over Omega^(2t * n_tilde)
};

inline BlockedFamilies blocked_families(const WordSet& a, unsigned t) {
    if (t == 0 || 2 * t > a.n())
        throw hypothesis_error("blocked construction needs 1 <= t <= n/2 (t = " +
                               std::to_string(t) + ", n = " + std::to_string(a.n()) + ")");
    BlockedFamilies out;
    out.t = t;
    out.n_tilde = a.n() / (2 * t);
    out.r = a.n() - 2 * t * out.n_tilde;
    const unsigned len = a.n() - out.r;
    out.families.reserve(2 * t);
    out.families.push_back(shift_iterate(a, out.r));
    WordSet cur = out.families.front();
    for (unsigned i = 1; i < 2 * t; ++i) {
        cur = shift_set(cur);
        out.families.push_back(lift_set(cur, len));
    }
    return out;
}

struct BlockedCheck {
    unsigned q = 0, n = 0, t = 0, n_tilde = 0, r = 0;
    bool counting_pass = false;     // pointwise #{i : w~ not in U~_i} <= f(w)
    std::uint64_t violations = 0;
    Ratio chain_lhs;                // t * mu({f <= t})
    Ratio chain_rhs;                // sum_i mu(U~(A~_i))
    bool chain_pass = false;
    std::vector<Ratio> family_mu;   // mu(A~_i), each >= alpha
    std::vector<Ratio> u_mu;        // mu(U~(A~_i))
};

inline BlockedCheck verify_blocked_counting(const WordSet& a, unsigned t) {
    const CoverageProfile prof = coverage_counts(a);
    const BlockedFamilies bf = blocked_families(a, t);

    BlockedCheck chk;
    chk.q = a.q();
    chk.n = a.n();
    chk.t = t;
    chk.n_tilde = bf.n_tilde;
    chk.r = bf.r;

    std::vector<WordSet> u_sets;
    u_sets.reserve(bf.families.size());
    for (const WordSet& fam : bf.families) {
        chk.family_mu.push_back(fam.measure());
        u_sets.push_back(non_overlap_blocked(fam, 2 * t));
        chk.u_mu.push_back(u_sets.back().measure());
    }

    const std::uint64_t reduced = u_sets.front().universe_size();  // q^(n-r)
    const std::uint64_t tail = a.universe_size() / reduced;        // q^r free trailing symbols
    std::vector<std::uint8_t> missed(reduced, 0);                  // #{i : w~ not in U~_i}
    for (const WordSet& u : u_sets)
        for (std::uint64_t x = 0; x < reduced; ++x) missed[x] += !u.contains(x);
    for (std::uint64_t w = 0; w < a.universe_size(); ++w)
        chk.violations += missed[w / tail] > prof.f[w];
    chk.counting_pass = chk.violations == 0;

    chk.chain_lhs = t * level_set_measure(prof, t);
    chk.chain_rhs = 0;
    for (const Ratio& mu : chk.u_mu) chk.chain_rhs += mu;
    chk.chain_pass = chk.chain_lhs <= chk.chain_rhs;
    return chk;
}

}  // namespace nonoverlap
