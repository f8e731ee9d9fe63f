#pragma once

// Machine-checked certificates for the main density bound
//
//   alpha * mu(U(A)) <= (rho - 1) / rho^(n+1) <= (1/n) (n/(n+1))^(n+1),
//
// where rho > 1 is the unique root of F(rho) = sum_j delta_j rho^j = 1.
//
// rho is the only non-rational quantity in the whole pipeline.  It is handled
// by a certified enclosure: bisection with rational endpoints, terminating at
// width 1e-12, with F(lo) <= 1 <= F(hi) established in exact arithmetic.  The
// map g(rho) = (rho-1)/rho^(n+1) is unimodal with peak at (n+1)/n, so on any
// enclosure min(g(lo), g(hi)) <= g(rho*); the inner comparison against that
// minimum plus a 1e-9 tolerance can therefore never falsely reject.  The
// outer comparison against the closed-form bound stays exact.

#include <nonoverlap/density_profile.hpp>
#include <nonoverlap/errors.hpp>
#include <nonoverlap/overlap.hpp>
#include <nonoverlap/ratio.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nonoverlap {

inline const Ratio kRhoEnclosureWidth = Ratio(1, BigInt("1000000000000"));  // 1e-12
inline const Ratio kInnerTolerance = Ratio(1, 1000000000);                  // 1e-9
inline constexpr double kMaximizerGridTolerance = 1e-12;

struct RhoEnclosure {
    Ratio lo, hi;  // F(lo) <= 1 <= F(hi), hi - lo <= requested width
    double mid() const { return to_double((lo + hi) / 2); }
};

/// F(rho) = sum_{j=1}^{n} delta[j] rho^j (Horner; delta[0] ignored).
inline Ratio weight_poly(const std::vector<Ratio>& delta, const Ratio& rho) {
    Ratio acc = 0;
    for (std::size_t j = delta.size(); j-- > 1;) {
        acc += delta[j];
        acc *= rho;  // the j = 1 pass applies the remaining factor rho^1
    }
    return acc;
}

/// Certified enclosure of the root of F = 1.  delta[0] is ignored; requires
/// delta[j] >= 0 with 0 < sum delta[j] = 1 - alpha < 1.
inline RhoEnclosure solve_rho(const std::vector<Ratio>& delta, const Ratio& alpha,
                              const Ratio& width = kRhoEnclosureWidth) {
    if (alpha <= 0 || alpha >= 1)
        throw std::invalid_argument("inconsistent profile: alpha must lie in (0,1)");
    if (delta.size() < 2) throw std::invalid_argument("inconsistent profile: no delta entries");
    Ratio sum = 0;
    bool positive = false;
    for (std::size_t j = 1; j < delta.size(); ++j) {
        if (delta[j] < 0) throw std::invalid_argument("inconsistent profile: negative delta");
        positive = positive || delta[j] > 0;
        sum += delta[j];
    }
    if (!positive || sum != 1 - alpha)
        throw std::invalid_argument("inconsistent profile: deltas must sum to 1 - alpha > 0");

    Ratio lo = 1, hi = 2;
    while (weight_poly(delta, hi) < 1) {
        lo = hi;
        hi *= 2;
        if (hi > Ratio(BigInt(1) << 70))  // F(2^70) > 2^70 / q^n >= 1 always; never reached
            throw std::logic_error("rho bracket failed to close");
    }
    while (hi - lo > width) {
        const Ratio mid = (lo + hi) / 2;
        (weight_poly(delta, mid) < 1 ? lo : hi) = mid;
    }
    return {lo, hi};
}

/// g(rho) = (rho - 1) / rho^(n+1), the gap the root certifies.
inline Ratio rho_gap(const Ratio& rho, unsigned n) { return (rho - 1) / rpow(rho, n + 1); }

/// Closed-form bound on gamma_n = mu(U(A)) given alpha: (n/(n+1))^(n+1) / (alpha n).
inline Ratio gamma_upper_bound(const Ratio& alpha, unsigned n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("alpha must lie in (0,1)");
    return rpow(Ratio(n, n + 1), n + 1) / (alpha * n);
}

/// Closed-form bound on the product alpha * gamma_n: (1/n) (n/(n+1))^(n+1).
inline Ratio product_upper_bound(unsigned n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    return rpow(Ratio(n, n + 1), n + 1) / n;
}

struct TheoremCertificate {
    unsigned q = 0, n = 0;
    DensityProfile profile;
    LambdaTable lambda;
    bool lambda_ok = false;       // alpha_{j-r} >= lambda_{j,r} everywhere
    SlackReport beta_report;      // beta-form slacks
    SlackReport gamma_report;     // gamma-form slacks
    Ratio alpha;                  // mu(A) = alpha_n
    Ratio gamma_n;                // mu(U(A))
    Ratio lhs;                    // alpha * gamma_n
    RhoEnclosure rho;
    Ratio rhs_lo, rhs_hi;         // g at the enclosure endpoints, exact
    bool inner_pass = false;      // lhs <= min(rhs_lo, rhs_hi) + tolerance
    Ratio bound;                  // product_upper_bound(n)
    Ratio gamma_bound;            // gamma_upper_bound(alpha, n)
    bool outer_pass = false;      // lhs <= bound, exact

    bool pass() const {
        return lambda_ok && beta_report.pass && gamma_report.pass && inner_pass && outer_pass;
    }
};

inline TheoremCertificate verify_theorem_certificate(const WordSet& a,
                                                     const Ratio& inner_tol = kInnerTolerance,
                                                     const Ratio& rho_width = kRhoEnclosureWidth) {
    const ProfileComputation comp = compute_profile(a);
    check_profile_invariants(comp);

    TheoremCertificate cert;
    cert.q = a.q();
    cert.n = a.n();
    cert.profile = comp.profile;

    cert.lambda = lambda_table(a);
    cert.lambda_ok = true;
    for (unsigned j = 2; j <= cert.n; ++j)
        for (unsigned r = 1; r < j; ++r)
            cert.lambda_ok = cert.lambda_ok && cert.profile.alpha[j - r] >= cert.lambda.at(j, r);

    cert.beta_report = verify_beta_inequality(cert.profile);
    cert.gamma_report = verify_gamma_inequality(cert.profile);

    cert.alpha = cert.profile.alpha[cert.n];
    cert.gamma_n = cert.profile.gamma[cert.n];
    cert.lhs = cert.alpha * cert.gamma_n;
    cert.rho = solve_rho(cert.profile.delta, cert.alpha, rho_width);
    cert.rhs_lo = rho_gap(cert.rho.lo, cert.n);
    cert.rhs_hi = rho_gap(cert.rho.hi, cert.n);
    cert.inner_pass = cert.lhs <= std::min(cert.rhs_lo, cert.rhs_hi) + inner_tol;
    cert.bound = product_upper_bound(cert.n);
    cert.gamma_bound = gamma_upper_bound(cert.alpha, cert.n);
    cert.outer_pass = cert.lhs <= cert.bound;
    return cert;
}

struct MaximizerReport {
    unsigned n = 0;
    double grid_max = 0;    // max of g over the grid
    double grid_argmax = 0; // grid point attaining it
    double peak = 0;        // g((n+1)/n)
    bool pass = false;      // grid_max <= peak + tolerance
};

/// Grid check that g(rho) peaks at rho = (n+1)/n: 10^4 points in (1, 10].
inline MaximizerReport rho_maximizer_check(unsigned n, std::size_t grid_points = 10000,
                                           double tol = kMaximizerGridTolerance) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    MaximizerReport r;
    r.n = n;
    auto g = [n](double rho) { return (rho - 1) / std::pow(rho, n + 1); };
    for (std::size_t i = 1; i <= grid_points; ++i) {
        const double rho = 1.0 + 9.0 * static_cast<double>(i) / static_cast<double>(grid_points);
        const double v = g(rho);
        if (v > r.grid_max) {
            r.grid_max = v;
            r.grid_argmax = rho;
        }
    }
    r.peak = g((n + 1.0) / n);
    r.pass = r.grid_max <= r.peak + tol;
    return r;
}

}  // namespace nonoverlap
