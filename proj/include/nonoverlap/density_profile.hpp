#pragma once

// The density ladder behind the main bound.
//
// For A over Omega^n with alpha = mu(A) in (0,1), write A_j = s^(n-j)(A) and
// B_j for the incremental covers of non_overlap_incremental.  The profile is
//
//   alpha[j] = mu(A_j)            alpha[0] = 1
//   beta[j]  = mu(B_j)            beta[0]  = 0
//   gamma[j] = 1 - beta[j]
//   delta[j] = alpha[j-1] - alpha[j]
//
// Two equivalent inequality families are checked with exact slacks:
//
//   (beta form)   beta_j >= alpha_j + sum_{i=1}^{j-1} (1 - alpha_{j-i}) (beta_i - beta_{i-1})
//   (gamma form)  gamma_j <= sum_{i=0}^{j-1} gamma_i delta_{j-i}
//
// The lambda table lambda[j][r] = max over prefixes w in Omega^r of the slice
// measure mu(A_j(w)) witnesses alpha_{j-r} >= lambda_{j,r}.

#include <nonoverlap/errors.hpp>
#include <nonoverlap/overlap.hpp>
#include <nonoverlap/word_set.hpp>

#include <string>
#include <vector>

namespace nonoverlap {

struct DensityProfile {
    unsigned q = 0, n = 0;
    std::vector<Ratio> alpha;  // size n+1, alpha[0] = 1
    std::vector<Ratio> beta;   // size n+1, beta[0] = 0
    std::vector<Ratio> gamma;  // size n+1, gamma[0] = 1
    std::vector<Ratio> delta;  // size n+1, delta[0] = 0 unused
};

struct ProfileComputation {
    DensityProfile profile;
    std::vector<WordSet> a_seq;  // a_seq[j-1] = A_j over Omega^j
    std::vector<WordSet> b_seq;  // b_seq[j-1] = B_j over Omega^j
    WordSet u;                   // U(A)
};

inline ProfileComputation compute_profile(const WordSet& a) {
    if (a.count() == 0 || a.count() == a.universe_size())
        throw hypothesis_error("density profile needs alpha in (0,1); got alpha = " +
                               std::to_string(a.count() == 0 ? 0 : 1));
    const unsigned n = a.n();
    std::vector<WordSet> a_seq = shift_ladder(a);
    IncrementalResult inc = non_overlap_incremental(a);

    DensityProfile p;
    p.q = a.q();
    p.n = n;
    p.alpha.assign(n + 1, Ratio(1));
    p.beta.assign(n + 1, Ratio(0));
    p.gamma.assign(n + 1, Ratio(1));
    p.delta.assign(n + 1, Ratio(0));
    for (unsigned j = 1; j <= n; ++j) {
        p.alpha[j] = a_seq[j - 1].measure();
        p.beta[j] = inc.b_seq[j - 1].measure();
        p.gamma[j] = 1 - p.beta[j];
        p.delta[j] = p.alpha[j - 1] - p.alpha[j];
    }
    return {std::move(p), std::move(a_seq), std::move(inc.b_seq), std::move(inc.u)};
}

inline DensityProfile density_profile(const WordSet& a) { return compute_profile(a).profile; }

/// Largest slice density max_{w in Omega^r} mu({v : wv in A}), 1 <= r < n(A).
inline Ratio max_slice_measure(const WordSet& a, unsigned r) {
    if (r == 0 || r >= a.n()) throw std::invalid_argument("prefix length must be in [1, n-1]");
    std::uint64_t slice = a.universe_size();
    for (unsigned i = 0; i < r; ++i) slice /= a.q();
    std::uint64_t best = 0;
    const std::uint64_t prefixes = a.universe_size() / slice;
    for (std::uint64_t w = 0; w < prefixes; ++w)
        best = std::max(best, a.count_range(w * slice, slice));
    return Ratio(BigInt(best), BigInt(slice));
}

struct LambdaTable {
    unsigned q = 0, n = 0;
    std::vector<std::vector<Ratio>> rows;  // rows[j][r] defined for 1 <= r < j <= n

    const Ratio& at(unsigned j, unsigned r) const {
        if (j > n || r == 0 || r >= j) throw std::out_of_range("lambda index (j, r)");
        return rows[j][r];
    }
};

inline LambdaTable lambda_table(const WordSet& a) {
    const std::vector<WordSet> a_seq = shift_ladder(a);
    LambdaTable t;
    t.q = a.q();
    t.n = a.n();
    t.rows.resize(t.n + 1);
    for (unsigned j = 2; j <= t.n; ++j) {
        t.rows[j].resize(j);
        for (unsigned r = 1; r < j; ++r) t.rows[j][r] = max_slice_measure(a_seq[j - 1], r);
    }
    return t;
}

struct SlackReport {
    bool pass = true;
    std::vector<Ratio> slack;  // size n+1, slack[0] unused; >= 0 means the j-th check holds
};

/// beta form: slack[j] = beta_j - alpha_j - sum_{i<j} (1 - alpha_{j-i})(beta_i - beta_{i-1}).
inline SlackReport verify_beta_inequality(const DensityProfile& p) {
    SlackReport r;
    r.slack.assign(p.n + 1, Ratio(0));
    for (unsigned j = 1; j <= p.n; ++j) {
        Ratio rhs = p.alpha[j];
        for (unsigned i = 1; i < j; ++i)
            rhs += (1 - p.alpha[j - i]) * (p.beta[i] - p.beta[i - 1]);
        r.slack[j] = p.beta[j] - rhs;
        r.pass = r.pass && r.slack[j] >= 0;
    }
    return r;
}

/// gamma form: slack[j] = sum_{i=0}^{j-1} gamma_i delta_{j-i} - gamma_j.
inline SlackReport verify_gamma_inequality(const DensityProfile& p) {
    SlackReport r;
    r.slack.assign(p.n + 1, Ratio(0));
    for (unsigned j = 1; j <= p.n; ++j) {
        Ratio rhs = 0;
        for (unsigned i = 0; i < j; ++i) rhs += p.gamma[i] * p.delta[j - i];
        r.slack[j] = rhs - p.gamma[j];
        r.pass = r.pass && r.slack[j] >= 0;
    }
    return r;
}

/// Structural identities every computed profile must satisfy; violations are
/// internal errors, not bad inputs, hence std::logic_error with diagnostics.
inline void check_profile_invariants(const ProfileComputation& c) {
    const DensityProfile& p = c.profile;
    auto fail = [](const std::string& what) { throw std::logic_error("profile invariant: " + what); };
    for (unsigned j = 2; j <= p.n; ++j) {
        if (p.beta[j] < p.beta[j - 1])
            fail("beta not nondecreasing at j=" + std::to_string(j));
        if (p.alpha[j] > p.alpha[j - 1])
            fail("alpha not nonincreasing at j=" + std::to_string(j));
    }
    if (p.beta[1] != p.alpha[1]) fail("beta_1 != alpha_1");
    Ratio dsum = 0;
    for (unsigned j = 1; j <= p.n; ++j) {
        if (p.delta[j] < 0) fail("delta negative at j=" + std::to_string(j));
        if (p.gamma[j] != 1 - p.beta[j]) fail("gamma_j != 1 - beta_j at j=" + std::to_string(j));
        dsum += p.delta[j];
    }
    if (dsum != 1 - p.alpha[p.n]) fail("sum of deltas != 1 - alpha_n");
    // Increments of beta are the measures of the fresh parts D_j = A_j \ (B_{j-1} x Omega).
    for (unsigned j = 2; j <= p.n; ++j) {
        const WordSet fresh = set_difference(c.a_seq[j - 1], lift_set(c.b_seq[j - 2], j));
        if (fresh.measure() != p.beta[j] - p.beta[j - 1])
            fail("mu(D_j) != beta_j - beta_{j-1} at j=" + std::to_string(j));
    }
    if (c.u.measure() != p.gamma[p.n]) fail("mu(U) != gamma_n");
}

}  // namespace nonoverlap
