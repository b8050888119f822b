#include "helpers.hpp"

#include "gf2lab/checks/oracles.hpp"
#include "gf2lab/errors.hpp"
#include "gf2lab/harness.hpp"
#include "gf2lab/matroid.hpp"
#include "gf2lab/random.hpp"

#include <doctest.h>

using namespace gf2lab;
using gf2lab::test::set_of;
using gf2lab::test::w;

namespace {

std::string detail(const VerifierReport& r, const std::string& key) {
    for (const auto& [k, v] : r.details)
        if (k == key) return v;
    return {};
}

} // namespace

TEST_CASE("theorem_constants at alpha 1/2, k 5") {
    ConstantsLedger c = theorem_constants(Rational(1, 2), 5);
    CHECK(c.epsilon == Rational(1, 8));
    CHECK(c.epsilon_exponent == 3);
    CHECK(c.alpha0 == Rational(3, 8));
    CHECK(c.selection_margin == Rational(17, 4096));
    CHECK(c.r0_offset == 12);
    CHECK(c.c_offset == 12);
    CHECK(c.beta_bracket == Rational(1, 4096));
    CHECK(c.log2_beta_s0_coeff == -3);
    CHECK(c.factorial == 24);
    CHECK(c.tower_height == 512);
    CHECK(c.s0_text() == "W(512)");
    CHECK(c.log2_beta_text() == "-3*s0 - log2(24) - 12");
    for (std::int64_t s = 1; s <= 40; ++s) {
        CHECK(c.beta_at(s) > 0);
        CHECK(c.r0_slack_at(s) > 0);
        CHECK(c.beta_at(s) == pow2(-3 * s - 12) / 24);
    }
    // The offset is the least one that works.
    CHECK(c.selection_margin - pow2(c.k - 1 - (c.r0_offset - 1)) <= 0);
}

TEST_CASE("theorem_constants over a grid") {
    for (int k : {5, 7, 9})
        for (int den : {1, 2, 3, 5, 10}) {
            Rational alpha(1, den);
            ConstantsLedger c = theorem_constants(alpha, k);
            CHECK(c.selection_margin > 0);
            CHECK(c.alpha0 == alpha - c.epsilon);
            // Larger epsilon on the grid would violate the constraint.
            Rational bigger = c.epsilon * 2;
            if (alpha - bigger > 0)
                CHECK(pow(alpha - bigger, static_cast<unsigned>(k - 1)) - pow(bigger, static_cast<unsigned>(k - 3)) <= 0);
            for (std::int64_t s = 1; s <= 40; ++s) CHECK(c.beta_at(s) > 0);
        }
    CHECK_THROWS_AS(theorem_constants(Rational(0), 5), InvalidArgument);
    CHECK_THROWS_AS(theorem_constants(Rational(3, 2), 5), InvalidArgument);
    CHECK_THROWS_AS(theorem_constants(Rational(1, 2), 4), InvalidArgument);
    CHECK_THROWS_AS(theorem_constants(Rational(1, 2), 3), InvalidArgument);
}

TEST_CASE("verify_sum_bound") {
    VerifierReport r = verify_sum_bound(set_of(2, {"01", "10", "11"}), 3);
    CHECK(r.pass);
    CHECK(r.statement == "lemma22");
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].lhs == 24); // worst x = 00, N = 6
    CHECK(r.checks[0].rhs == 11);

    VerifierReport full = verify_sum_bound(PointSet::full(4), 3);
    CHECK(full.pass);
    CHECK(full.checks[0].lhs == full.checks[0].rhs);

    VerifierReport empty = verify_sum_bound(PointSet(3), 3);
    CHECK(empty.pass);
    CHECK(empty.checks[0].lhs == 0);
    CHECK(empty.checks[0].rhs == 0);
    CHECK_THROWS_AS(verify_sum_bound(PointSet(3), 2), InvalidArgument);
}

TEST_CASE("verify_degenerate_bound") {
    VerifierReport r = verify_degenerate_bound(set_of(2, {"01", "10", "11"}), 3, w("01"));
    CHECK(r.pass);
    CHECK(r.checks[0].lhs == 7);
    CHECK(r.checks[0].rhs == 24);

    CHECK(verify_degenerate_bound(PointSet(3), 3, w("001")).checks[0].rhs == 0);
    CHECK(verify_degenerate_bound(PointSet(3), 3, w("001")).pass);

    PointSet pg = generate_projective(3);
    VerifierReport p = verify_degenerate_bound(pg, 4, w("001"));
    CHECK(p.pass);
    CHECK(p.checks[0].lhs == BigInt(oracle::degenerate_count(pg, 4, w("001"))));
    CHECK(p.checks[0].rhs == 784);

    VerifierReport all = verify_degenerate_bound_all(pg, 4);
    CHECK(all.pass);
}

TEST_CASE("verify_triangle_bound") {
    PointSet a = set_of(2, {"01", "10", "11"});
    VerifierReport r = verify_triangle_bound(a, a, a);
    CHECK(r.pass);
    CHECK(r.checks[0].lhs == 24);
    CHECK(r.checks[0].rhs == 11);

    CHECK(verify_triangle_bound(a, a, PointSet(2)).pass);

    PointSet b = generate_random_density(5, Rational(1, 2), 3);
    PointSet c = generate_random_density(5, Rational(1, 3), 4);
    VerifierReport eq = verify_triangle_bound(PointSet::full(5), b, c);
    CHECK(eq.pass);
    CHECK(eq.checks[0].lhs == eq.checks[0].rhs);
    CHECK_THROWS_AS(verify_triangle_bound(a, a, PointSet(3)), DimensionMismatch);
}

TEST_CASE("suites pass and are deterministic") {
    auto sums = run_sum_bound_suite(6, 4, 10, 99);
    CHECK(sums.size() == 10);
    for (const auto& r : sums) CHECK(r.pass);
    auto again = run_sum_bound_suite(6, 4, 10, 99);
    for (std::size_t i = 0; i < sums.size(); ++i) {
        CHECK(sums[i].instance.seed == again[i].instance.seed);
        CHECK(sums[i].checks[0].lhs == again[i].checks[0].lhs);
    }
    for (const auto& r : run_degenerate_bound_suite(5, 3, 5, 1)) CHECK(r.pass);
    for (const auto& r : run_triangle_bound_suite(7, 5, 1)) CHECK(r.pass);
}

TEST_CASE("pick_anchor") {
    SUBCASE("dense set prefers the zero anchor") {
        PointSet x = generate_projective(5);
        AnchorResult a = pick_anchor(x, Subspace::full(5), Rational(1, 4));
        CHECK(a.anchor == 0);
        CHECK(a.anchor_sum == BigInt(x.size()) * 32);
    }
    SUBCASE("affine layer anchors in the other coset") {
        Word gamma = w("011010");
        PointSet x = generate_affine_layer(6, gamma);
        Subspace h = hyperplane_of(GF2Vector(gamma, 6));
        AnchorResult a = pick_anchor(x, h, Rational(1, 4));
        CHECK(a.anchor == w("000010"));
        CHECK(a.section.size() == h.size());
        CHECK(a.uniformity.max_abs_correlation == 0);
    }
    SUBCASE("empty set is rejected") {
        CHECK_THROWS_AS(pick_anchor(PointSet(3), Subspace::full(3), Rational(1, 4)), InvalidArgument);
    }
    SUBCASE("irregular subspace is rejected") {
        PointSet x = generate_affine_layer(4, 1);
        CHECK_THROWS_AS(pick_anchor(x, Subspace::full(4), Rational(1, 8)), InvalidArgument);
    }
}

TEST_CASE("dichotomy_experiment") {
    SUBCASE("affine layer lands in the critical branch") {
        DichotomyOutcome d = dichotomy_experiment(generate_affine_layer(6, w("100101")), 5, Rational(1, 4));
        CHECK(d.critical_branch);
        CHECK(d.codim == 1);
        CHECK(d.report.pass);
        CHECK(detail(d.report, "critical_number_at_most") == "1");
    }
    SUBCASE("PG(3,2) produces circuits through x") {
        PointSet pg = generate_projective(4);
        DichotomyOutcome d = dichotomy_experiment(pg, 5, Rational(1, 4));
        CHECK_FALSE(d.critical_branch);
        CHECK(d.report.pass);
        CHECK(d.sum_tuples - d.degenerate_tuples == 24 * BigInt(d.restricted_dfs_circuits));
        REQUIRE(d.all_circuits.has_value());
        CHECK(*d.all_circuits == 56);
        CHECK(d.anchor == 0);
        // With a = 0 every circuit through x lies in the anchor coset.
        CHECK(d.lifted_circuits == 56);
    }
    SUBCASE("empty or non-simple inputs are rejected") {
        CHECK_THROWS_AS(dichotomy_experiment(PointSet(4), 5, Rational(1, 4)), InvalidArgument);
        CHECK_THROWS_AS(dichotomy_experiment(set_of(2, {"00", "01"}), 5, Rational(1, 4)), InvalidArgument);
        CHECK_THROWS_AS(dichotomy_experiment(generate_projective(4), 4, Rational(1, 4)), InvalidArgument);
    }
    SUBCASE("random inputs keep the cross-check exact") {
        Rng rng(51);
        for (int t = 0; t < 8; ++t) {
            int n = 5 + static_cast<int>(uniform_below(rng, 3));
            PointSet x = generate_random_density(n, Rational(3, 4), rng());
            DichotomyOutcome d = dichotomy_experiment(x, 5, Rational(1, 4));
            CHECK(d.report.pass);
        }
    }
}

TEST_CASE("weaker_procedure") {
    CHECK(select_delta(Rational(1, 4)) == Rational(1, 128));
    CHECK_THROWS_AS(select_delta(Rational(0)), InvalidArgument);

    SUBCASE("affine layer yields a sparse flat") {
        PointSet x = generate_affine_layer(8, w("10010110"));
        WeakerOutcome o = weaker_procedure(x, Rational(1, 4));
        CHECK_FALSE(o.triangle_branch);
        CHECK(o.report.pass);
        CHECK(Rational(BigInt(o.flat_hits)) <= Rational(1, 4) * pow2(o.flat.dim()));
        CHECK(o.flat.dim() >= 8 - o.achieved_codim);
    }
    SUBCASE("PG(2,2) at eps 1/4 only has the zero subspace as a regular flat") {
        PointSet pg = generate_projective(3);
        WeakerOutcome o = weaker_procedure(pg, Rational(1, 4));
        CHECK_FALSE(o.triangle_branch);
        CHECK(o.flat == Subspace::zero(3));
        CHECK(o.report.pass);
    }
    SUBCASE("PG(2,2) at eps 3/4 yields a triangle") {
        PointSet pg = generate_projective(3);
        WeakerOutcome o = weaker_procedure(pg, Rational(3, 4));
        CHECK(o.delta == Rational(1, 8));
        REQUIRE(o.triangle_branch);
        CHECK(o.report.pass);
        CHECK(oracle::is_circuit(o.triangle));
        for (Word e : o.triangle) CHECK(pg.contains(e));
    }
    SUBCASE("larger projective geometries also yield triangles") {
        for (int n = 4; n <= 6; ++n) {
            WeakerOutcome o = weaker_procedure(generate_projective(n), Rational(3, 4));
            REQUIRE(o.triangle_branch);
            CHECK(o.report.pass);
        }
    }
    SUBCASE("sparse sets return the whole space") {
        PointSet x = set_of(4, {"0001", "0010"});
        WeakerOutcome o = weaker_procedure(x, Rational(1, 4));
        CHECK(o.flat == Subspace::full(4));
        CHECK(o.report.pass);
    }
    SUBCASE("triangle-free inputs never give a triangle") {
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            PointSet x = generate_random_triangle_free(7 + static_cast<int>(seed % 3), seed);
            REQUIRE_FALSE(oracle::has_zero_sum_triple(x));
            WeakerOutcome o = weaker_procedure(x, Rational(1, 4));
            CHECK_FALSE(o.triangle_branch);
            CHECK(o.report.pass);
        }
    }
    SUBCASE("dense random sets") {
        Rng rng(61);
        for (int t = 0; t < 6; ++t) {
            PointSet x = generate_random_density(7, Rational(2, 3), rng());
            WeakerOutcome o = weaker_procedure(x, Rational(1, 4));
            CHECK(o.report.pass);
            if (o.triangle_branch) CHECK(has_triangle(x));
        }
    }
    CHECK(has_triangle(generate_projective(3)));
    CHECK_FALSE(has_triangle(generate_affine_layer(5, 3)));
}
