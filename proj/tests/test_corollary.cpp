#include <catch2/catch_amalgamated.hpp>

#include <nonoverlap/corollary.hpp>
#include <nonoverlap/overlap.hpp>

#include "oracle_helpers.hpp"

#include <random>

using namespace nonoverlap;

TEST_CASE("level sets follow the coverage oracle", "[corollary][oracle]") {
    std::mt19937_64 rng(301);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned q = 2 + static_cast<unsigned>(bounded_draw(rng, 2));
        const unsigned n = 2 + static_cast<unsigned>(bounded_draw(rng, 3));
        const WordSet a = oracle::random_proper_set(q, n, rng);
        const CoverageProfile p = coverage_counts(a);
        const std::vector<unsigned> f = oracle::coverage(a);
        for (unsigned t = 0; t <= n; ++t) {
            const WordSet ls = level_set(p, t);
            std::uint64_t expect = 0;
            for (std::uint64_t x = 0; x < a.universe_size(); ++x) {
                CHECK(ls.contains(x) == (f[x] <= t));
                expect += f[x] <= t;
            }
            CHECK(level_set_measure(p, t) == Ratio(expect, a.universe_size()));
        }
    }
}

TEST_CASE("level-set measure entry point enforces the hypotheses", "[corollary]") {
    const WordSet a = WordSet::from_indices(2, 4, {0, 2, 4, 6, 8, 10, 12, 14});
    CHECK(level_set_measure(a, 1) == Ratio(5, 16));
    CHECK_THROWS_AS(level_set_measure(a, 0), hypothesis_error);
    CHECK_THROWS_AS(level_set_measure(a, 2), hypothesis_error);  // t > n/4
    CHECK_THROWS_AS(level_set_measure(WordSet::empty_set(2, 4), 1), hypothesis_error);
    CHECK_THROWS_AS(level_set_measure(WordSet::full_set(2, 4), 1), hypothesis_error);
}

TEST_CASE("corollary report on the even-words example", "[corollary]") {
    // A = words of Omega^4 ending in 0; alpha = 1/2, t = 1: bound 4/(0.5*4) = 2.
    const WordSet a = WordSet::from_indices(2, 4, {0, 2, 4, 6, 8, 10, 12, 14});
    const CorollaryReport r = corollary_check(a, 1);
    CHECK(r.alpha == Ratio(1, 2));
    CHECK(r.level_measure == Ratio(5, 16));
    CHECK(r.bound == Ratio(2));
    CHECK(r.slack == Ratio(2) - Ratio(5, 16));
    CHECK(r.vacuous);  // bound >= 1 says nothing
    CHECK(r.pass);
    // alpha >= 1/n holds but t* = floor(alpha n / 8) = 0: remark not usable.
    CHECK_FALSE(r.remark_applicable);
}

TEST_CASE("corollary bound holds exactly on random admissible sets", "[corollary]") {
    std::mt19937_64 rng(302);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned n = trial % 2 == 0 ? 4 : 8;
        const std::uint64_t size = checked_universe(2, n);
        // keep alpha >= 1/n so the bound is meaningfully small
        const std::uint64_t lo = (size + n - 1) / n;
        const std::uint64_t m = lo + bounded_draw(rng, size - lo);
        const WordSet a = random_word_set(2, n, m, rng);
        for (unsigned t = 1; 4 * t <= n; ++t) {
            const CorollaryReport r = corollary_check(a, t);
            CHECK(r.pass);
            CHECK(r.level_measure <= r.bound);
            CHECK(r.bound == Ratio(4 * t) / (a.measure() * n));
            CHECK(r.slack == r.bound - r.level_measure);
            CHECK(r.vacuous == (r.bound >= 1));
        }
    }
}

TEST_CASE("the remark threshold kicks in once alpha n reaches 8", "[corollary]") {
    // q=2, n=16, alpha = 1/2: t* = floor(16 * (1/2) / 8) = 1.
    std::mt19937_64 rng(303);
    const WordSet a = random_word_set(2, 16, 1u << 15, rng);
    const CorollaryReport r = corollary_check(a, 1);
    CHECK(r.remark_applicable);
    CHECK(r.remark_t == 1);
    CHECK(r.remark_measure <= Ratio(1, 2));
    CHECK(r.remark_pass);
    CHECK_FALSE(r.vacuous);  // bound = 4/(8) = 1/2 < 1
    CHECK(r.bound == Ratio(1, 2));
}

TEST_CASE("blocked construction shape", "[corollary][blocked]") {
    std::mt19937_64 rng(304);
    const WordSet a = oracle::random_proper_set(2, 7, rng);

    const BlockedFamilies bf = blocked_families(a, 1);
    CHECK(bf.t == 1);
    CHECK(bf.n_tilde == 3);  // floor(7 / 2)
    CHECK(bf.r == 1);
    REQUIRE(bf.families.size() == 2);
    for (unsigned i = 0; i < bf.families.size(); ++i) {
        CHECK(bf.families[i].n() == 6);
        CHECK(bf.families[i] == lift_set(shift_iterate(a, bf.r + i), 6));
        CHECK(bf.families[i].measure() >= a.measure());  // shifts only densify
    }

    // t = 3 needs 2t <= n; t = 4 does not.
    CHECK(blocked_families(a, 3).families.size() == 6);
    CHECK_THROWS_AS(blocked_families(a, 4), hypothesis_error);
    CHECK_THROWS_AS(blocked_families(a, 0), hypothesis_error);
}

TEST_CASE("blocked counting argument verifies pointwise and in the mean", "[corollary][blocked]") {
    std::mt19937_64 rng(305);
    for (int trial = 0; trial < 25; ++trial) {
        const unsigned n = 4 + 2 * static_cast<unsigned>(bounded_draw(rng, 3));  // 4, 6, 8
        const WordSet a = oracle::random_proper_set(2, n, rng);
        for (unsigned t = 1; 2 * t <= n && t <= 2; ++t) {
            const BlockedCheck c = verify_blocked_counting(a, t);
            CHECK(c.counting_pass);
            CHECK(c.violations == 0);
            CHECK(c.chain_pass);
            CHECK(c.chain_lhs <= c.chain_rhs);
            REQUIRE(c.family_mu.size() == 2 * t);
            REQUIRE(c.u_mu.size() == 2 * t);
            Ratio total(0);
            for (const Ratio& x : c.u_mu) total += x;
            CHECK(c.chain_rhs == total);
            for (const Ratio& x : c.family_mu) CHECK(x >= a.measure());
        }
    }
}

TEST_CASE("blocked counting dominates the coverage count word by word",
          "[corollary][blocked][oracle]") {
    // Reassemble the pointwise inequality from parts: for every word w, the
    // number of families whose blocked U misses the leading-symbols reduction
    // of w is at most the coverage count f(w).  t = 1 blocks the whole word
    // (r = 0), t = 2 leaves r = 2 trailing symbols outside the blocks.
    std::mt19937_64 rng(306);
    const WordSet a = oracle::random_proper_set(2, 6, rng);
    const CoverageProfile cov = coverage_counts(a);
    for (unsigned t : {1u, 2u}) {
        const BlockedFamilies bf = blocked_families(a, t);
        const std::uint64_t reduced = checked_universe(2, a.n() - bf.r);
        const std::uint64_t tail = a.universe_size() / reduced;

        std::vector<WordSet> u_sets;
        for (const WordSet& fam : bf.families)
            u_sets.push_back(non_overlap_blocked(fam, 2 * t));

        for (std::uint64_t w = 0; w < a.universe_size(); ++w) {
            unsigned missed = 0;
            for (const WordSet& u : u_sets) missed += !u.contains(w / tail);
            CHECK(missed <= cov.f[w]);
        }
    }
}

TEST_CASE("blocked verification accepts t up to n/2, reports up to n/4", "[corollary][blocked]") {
    std::mt19937_64 rng(307);
    const WordSet a = oracle::random_proper_set(2, 4, rng);
    const BlockedCheck c = verify_blocked_counting(a, 2);  // fine: 2t = n
    CHECK(c.counting_pass);
    CHECK(c.n_tilde == 1);
    CHECK_THROWS_AS(corollary_check(a, 2), hypothesis_error);  // t > n/4
}
