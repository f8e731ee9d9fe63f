#include <catch2/catch_amalgamated.hpp>

#include <nonoverlap/certificate.hpp>
#include <nonoverlap/density_profile.hpp>

#include "oracle_helpers.hpp"

#include <random>

using namespace nonoverlap;

namespace {

/// Word-level recomputation of the profile: A_j by repeated digit dropping,
/// B_j as the running union of lifted A_i.
struct NaiveProfile {
    std::vector<Ratio> alpha, beta;
};

NaiveProfile naive_profile(const WordSet& a) {
    const unsigned n = a.n();
    NaiveProfile p;
    p.alpha.assign(n + 1, Ratio(1));
    p.beta.assign(n + 1, Ratio(0));

    std::vector<std::vector<std::uint64_t>> a_idx(n + 1);
    a_idx[n] = a.members();
    for (unsigned j = n; j-- > 1;) {
        // rebuild A_j from A_{j+1} digit-wise
        std::set<std::uint64_t> dropped;
        for (std::uint64_t x : a_idx[j + 1]) {
            const auto d = oracle::digits_of(x, a.q(), j + 1);
            std::uint64_t y = 0;
            for (std::size_t i = 1; i < d.size(); ++i) y = y * a.q() + d[i];
            dropped.insert(y);
        }
        a_idx[j].assign(dropped.begin(), dropped.end());
    }

    std::uint64_t space = a.q();
    std::set<std::uint64_t> b;  // B_j as indices over Omega^j
    for (unsigned j = 1; j <= n; ++j, space *= a.q()) {
        if (j > 1) {
            std::set<std::uint64_t> lifted;
            for (std::uint64_t x : b)
                for (unsigned t = 0; t < a.q(); ++t) lifted.insert(x * a.q() + t);
            b = std::move(lifted);
        }
        b.insert(a_idx[j].begin(), a_idx[j].end());
        p.alpha[j] = Ratio(BigInt(a_idx[j].size()), BigInt(space));
        p.beta[j] = Ratio(BigInt(b.size()), BigInt(space));
    }
    return p;
}

}  // namespace

TEST_CASE("profile matches a word-level recomputation", "[profile][oracle]") {
    std::mt19937_64 rng(201);
    for (int trial = 0; trial < 60; ++trial) {
        const unsigned q = 2 + static_cast<unsigned>(bounded_draw(rng, 2));
        const unsigned n = 2 + static_cast<unsigned>(bounded_draw(rng, 3));
        const WordSet a = oracle::random_proper_set(q, n, rng);
        const DensityProfile p = density_profile(a);
        const NaiveProfile np = naive_profile(a);
        for (unsigned j = 1; j <= n; ++j) {
            CHECK(p.alpha[j] == np.alpha[j]);
            CHECK(p.beta[j] == np.beta[j]);
            CHECK(p.gamma[j] == 1 - np.beta[j]);
            CHECK(p.delta[j] == np.alpha[j - 1] - np.alpha[j]);
        }
    }
}

TEST_CASE("profile invariants hold on random sets", "[profile]") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 60; ++trial) {
        const unsigned q = 2 + static_cast<unsigned>(bounded_draw(rng, 2));
        const unsigned n = 2 + static_cast<unsigned>(bounded_draw(rng, 4));
        const ProfileComputation comp = compute_profile(oracle::random_proper_set(q, n, rng));
        CHECK_NOTHROW(check_profile_invariants(comp));
    }
    CHECK_THROWS_AS(compute_profile(WordSet::empty_set(2, 3)), hypothesis_error);
    CHECK_THROWS_AS(compute_profile(WordSet::full_set(2, 3)), hypothesis_error);
}

TEST_CASE("beta and gamma forms carry identical slacks", "[profile]") {
    // The two inequality families are algebraic rearrangements of each other,
    // so the per-j slacks must agree exactly, not just in sign.
    std::mt19937_64 rng(203);
    for (int trial = 0; trial < 80; ++trial) {
        const unsigned q = 2 + static_cast<unsigned>(bounded_draw(rng, 2));
        const unsigned n = 2 + static_cast<unsigned>(bounded_draw(rng, 4));
        const DensityProfile p = density_profile(oracle::random_proper_set(q, n, rng));
        const SlackReport b = verify_beta_inequality(p);
        const SlackReport g = verify_gamma_inequality(p);
        REQUIRE(b.slack.size() == g.slack.size());
        for (unsigned j = 1; j <= n; ++j) {
            CHECK(b.slack[j] == g.slack[j]);
            CHECK(b.slack[j] >= 0);
        }
        CHECK(b.pass);
        CHECK(g.pass);
    }
}

TEST_CASE("gamma form is tight at j = n for prefix-run singletons", "[profile]") {
    for (unsigned n = 2; n <= 5; ++n) {
        const DensityProfile p = density_profile(WordSet::from_indices(2, n, {0}));
        const SlackReport g = verify_gamma_inequality(p);
        CHECK(g.slack[n] == 0);
    }
}

TEST_CASE("slice maxima bound the shifted densities", "[profile][lambda]") {
    std::mt19937_64 rng(204);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned q = 2 + static_cast<unsigned>(bounded_draw(rng, 2));
        const unsigned n = 2 + static_cast<unsigned>(bounded_draw(rng, 3));
        const WordSet a = oracle::random_proper_set(q, n, rng);
        const DensityProfile p = density_profile(a);
        const LambdaTable t = lambda_table(a);
        for (unsigned j = 2; j <= n; ++j)
            for (unsigned r = 1; r < j; ++r) CHECK(p.alpha[j - r] >= t.at(j, r));
    }

    // Singleton: every shifted set is a singleton, so each slice max is one
    // word out of q^(j-r).
    const WordSet s = WordSet::from_indices(3, 4, {50});
    const LambdaTable t = lambda_table(s);
    for (unsigned j = 2; j <= 4; ++j)
        for (unsigned r = 1; r < j; ++r)
            CHECK(t.at(j, r) == Ratio(1, ipow(BigInt(3), j - r)));
    CHECK_THROWS_AS(t.at(4, 0), std::out_of_range);
    CHECK_THROWS_AS(t.at(4, 4), std::out_of_range);
    CHECK_THROWS_AS(max_slice_measure(s, 4), std::invalid_argument);
}

TEST_CASE("slice maximum bounds intersections with prefix cylinders", "[profile][lambda]") {
    // For any prefix set B over Omega^r: mu(A meet (B x Omega^(n-r))) is at
    // most lambda * mu(B).  500 random pairs.
    std::mt19937_64 rng(205);
    for (int trial = 0; trial < 500; ++trial) {
        const unsigned q = 2 + static_cast<unsigned>(bounded_draw(rng, 2));
        const unsigned n = 2 + static_cast<unsigned>(bounded_draw(rng, 3));
        const unsigned r = 1 + static_cast<unsigned>(bounded_draw(rng, n - 1));
        const WordSet a = oracle::random_proper_set(q, n, rng);
        const WordSet b = oracle::random_proper_set(q, r, rng);
        const Ratio lhs = set_intersect(a, lift_set(b, n)).measure();
        CHECK(lhs <= max_slice_measure(a, r) * b.measure());
    }
}

TEST_CASE("weight polynomial and rho solving", "[rho]") {
    // F(rho) = sum_j delta_j rho^j evaluated by Horner.
    const std::vector<Ratio> d{Ratio(0), Ratio(1, 2), Ratio(1, 4)};
    CHECK(weight_poly(d, Ratio(1)) == Ratio(3, 4));
    CHECK(weight_poly(d, Ratio(2)) == Ratio(2));

    SECTION("mass at j = 1 only: rho = 1/delta_1 exactly") {
        const std::vector<Ratio> one{Ratio(0), Ratio(1, 2)};
        const RhoEnclosure e = solve_rho(one, Ratio(1, 2));
        CHECK(e.lo <= 2);
        CHECK(e.hi >= 2);
        CHECK(e.hi - e.lo <= kRhoEnclosureWidth);
        CHECK(weight_poly(one, e.lo) <= 1);
        CHECK(weight_poly(one, e.hi) >= 1);
    }

    SECTION("the {00} profile: rho is the golden-ratio conjugate shift") {
        // F(rho) = rho/2 + rho^2/4 = 1 has positive root sqrt(5) - 1.
        const RhoEnclosure e = solve_rho(d, Ratio(1, 4));
        CHECK(rpow(e.lo + 1, 2) <= 5);
        CHECK(rpow(e.hi + 1, 2) >= 5);
    }

    SECTION("mass at j = n only: rho^n (1 - alpha) = 1") {
        const Ratio alpha(1, 8);
        const std::vector<Ratio> tail{Ratio(0), Ratio(0), Ratio(0), 1 - alpha};
        const RhoEnclosure e = solve_rho(tail, alpha);
        CHECK(rpow(e.lo, 3) * (1 - alpha) <= 1);
        CHECK(rpow(e.hi, 3) * (1 - alpha) >= 1);
    }

    SECTION("narrower width requests are honored") {
        const Ratio w(1, BigInt("1000000000000000000"));
        const RhoEnclosure e = solve_rho(d, Ratio(1, 4), w);
        CHECK(e.hi - e.lo <= w);
    }

    SECTION("inconsistent profiles are rejected") {
        CHECK_THROWS_AS(solve_rho(d, Ratio(1, 2)), std::invalid_argument);  // sum != 1 - alpha
        CHECK_THROWS_AS(solve_rho(d, Ratio(0)), std::invalid_argument);
        CHECK_THROWS_AS(solve_rho(d, Ratio(1)), std::invalid_argument);
        CHECK_THROWS_AS(solve_rho({Ratio(0), Ratio(-1, 4), Ratio(1)}, Ratio(1, 4)),
                        std::invalid_argument);
    }
}

TEST_CASE("rho enclosure brackets the root exactly on random sets", "[rho]") {
    std::mt19937_64 rng(206);
    for (int trial = 0; trial < 60; ++trial) {
        const unsigned q = 2 + static_cast<unsigned>(bounded_draw(rng, 2));
        const unsigned n = 2 + static_cast<unsigned>(bounded_draw(rng, 4));
        const DensityProfile p = density_profile(oracle::random_proper_set(q, n, rng));
        const RhoEnclosure e = solve_rho(p.delta, p.alpha[n]);
        CHECK(e.lo >= 1);
        CHECK(e.lo < e.hi);
        CHECK(e.hi - e.lo <= kRhoEnclosureWidth);
        CHECK(weight_poly(p.delta, e.lo) <= 1);  // exact bracketing
        CHECK(weight_poly(p.delta, e.hi) >= 1);
    }
}

TEST_CASE("closed-form bounds", "[certificate]") {
    CHECK(product_upper_bound(1) == Ratio(1, 4));
    CHECK(product_upper_bound(2) == Ratio(4, 27));
    CHECK(product_upper_bound(3) == Ratio(27, 256));
    CHECK(gamma_upper_bound(Ratio(1, 4), 2) == Ratio(16, 27));
    CHECK(rho_gap(Ratio(2), 1) == Ratio(1, 4));
    CHECK(rho_gap(Ratio(3, 2), 2) == Ratio(1, 2) / Ratio(27, 8));
}

TEST_CASE("the {00} certificate reproduces its frozen values", "[certificate]") {
    const WordSet a = WordSet::from_indices(2, 2, {0});
    const TheoremCertificate c = verify_theorem_certificate(a);
    CHECK(c.alpha == Ratio(1, 4));
    CHECK(c.gamma_n == Ratio(1, 2));
    CHECK(c.lhs == Ratio(1, 8));
    CHECK(c.bound == Ratio(4, 27));
    CHECK(c.gamma_bound == Ratio(16, 27));
    CHECK(c.rho.mid() == Catch::Approx(1.2360679775).margin(1e-9));
    CHECK(c.lambda_ok);
    CHECK(c.beta_report.pass);
    CHECK(c.gamma_report.pass);
    CHECK(c.inner_pass);
    CHECK(c.outer_pass);
    CHECK(c.pass());

    // This instance sits exactly on the inner bound, so a zero-slack
    // tolerance must fail the enclosure comparison.
    const TheoremCertificate strict =
        verify_theorem_certificate(a, Ratio(1, BigInt("1000000000000000000000000000000")));
    CHECK_FALSE(strict.inner_pass);
    CHECK(strict.outer_pass);
}

TEST_CASE("certificates pass on random sets", "[certificate]") {
    std::mt19937_64 rng(207);
    for (int trial = 0; trial < 60; ++trial) {
        const unsigned q = 2 + static_cast<unsigned>(bounded_draw(rng, 2));
        const unsigned n = 2 + static_cast<unsigned>(bounded_draw(rng, 4));
        const TheoremCertificate c =
            verify_theorem_certificate(oracle::random_proper_set(q, n, rng));
        CHECK(c.pass());
        CHECK(c.lhs == c.alpha * c.gamma_n);
    }
}

TEST_CASE("the gap function peaks at (n+1)/n", "[rho]") {
    for (unsigned n = 1; n <= 8; ++n) {
        const MaximizerReport r = rho_maximizer_check(n);
        CHECK(r.pass);
        CHECK(r.grid_argmax == Catch::Approx((n + 1.0) / n).margin(2e-3));
        // g((n+1)/n) = (1/n) (n/(n+1))^(n+1), the universal product bound.
        CHECK(r.peak == Catch::Approx(to_double(product_upper_bound(n))).epsilon(1e-12));
    }
    CHECK_THROWS_AS(rho_maximizer_check(0), std::invalid_argument);
}
