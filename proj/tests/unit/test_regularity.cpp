#include "helpers.hpp"

#include "gf2lab/errors.hpp"
#include "gf2lab/random.hpp"
#include "gf2lab/regularity.hpp"
#include "gf2lab/spectral.hpp"

#include <doctest.h>

using namespace gf2lab;
using gf2lab::test::set_of;
using gf2lab::test::w;

TEST_CASE("is_regular") {
    CHECK(is_regular(PointSet(3), Subspace::full(3), Rational(1, 100)).regular);

    PointSet tri = set_of(2, {"01", "10", "11"});
    RegularityCert ok = is_regular(tri, Subspace::full(2), Rational(1, 4));
    CHECK(ok.regular);
    CHECK(ok.bad_cosets.empty());
    CHECK(ok.bad_mass == 0);

    RegularityCert bad = is_regular(tri, Subspace::full(2), Rational(1, 8));
    CHECK_FALSE(bad.regular);
    REQUIRE(bad.bad_cosets.size() == 1);
    CHECK(bad.bad_mass == 4);
    CHECK(bad.bad_cosets[0].representative == 0);
    CHECK(bad.bad_cosets[0].correlation == 1);

    CHECK(is_regular(tri, Subspace::zero(2), Rational(1, 8)).regular);
    CHECK_THROWS_AS(is_regular(tri, Subspace::full(2), Rational(0)), InvalidArgument);
    CHECK_THROWS_AS(is_regular(tri, Subspace::full(3), Rational(1, 2)), DimensionMismatch);
}

TEST_CASE("regularity certificates are consistent") {
    Rng rng(41);
    for (int t = 0; t < 30; ++t) {
        int n = 2 + static_cast<int>(uniform_below(rng, 7));
        PointSet x = generate_random_density(n, Rational(1, 2), rng());
        std::vector<Word> gens(uniform_below(rng, static_cast<std::uint64_t>(n)));
        for (auto& g : gens) g = static_cast<Word>(uniform_below(rng, x.space_size()));
        Subspace h = rref_span_words(gens, n);
        Rational eps(1, static_cast<long>(2 + uniform_below(rng, 8)));
        RegularityCert c = is_regular(x, h, eps);
        CHECK(c.bad_mass == BigInt(c.bad_cosets.size()) * BigInt(h.size()));
        CHECK(c.regular == (Rational(c.bad_mass) <= eps * Rational(BigInt(x.space_size()))));
        for (const auto& b : c.bad_cosets) {
            PointSet s = section(x, h, b.representative).points;
            CHECK(std::abs(correlations(s)[b.witness]) == b.correlation);
            CHECK(Rational(b.correlation) > eps * Rational(BigInt(h.size())));
        }
        // Monotone in eps.
        if (c.regular) CHECK(is_regular(x, h, eps * 2).regular);
        // For H = V regularity is uniformity of X.
        CHECK(is_regular(x, Subspace::full(n), eps).regular == uniformity(x).is_uniform(eps));
    }
}

TEST_CASE("find_regular_subspace") {
    RefinementTrace empty = find_regular_subspace(PointSet(4), Rational(1, 8));
    CHECK(empty.steps.empty());
    CHECK(empty.final.subspace == Subspace::full(4));

    RefinementTrace layer = find_regular_subspace(generate_affine_layer(6, w("101100")), Rational(1, 4));
    CHECK(layer.final.regular);
    CHECK(is_regular(generate_affine_layer(6, w("101100")), layer.final.subspace, Rational(1, 4)).regular);

    PointSet any = generate_random_density(7, Rational(1, 3), 5);
    RefinementTrace easy = find_regular_subspace(any, Rational(1));
    CHECK(easy.steps.empty());
    CHECK(easy.final.subspace == Subspace::full(7));

    CHECK_THROWS_AS(find_regular_subspace(any, Rational(-1, 2)), InvalidArgument);
}

TEST_CASE("refinement traces certify themselves") {
    Rng rng(42);
    for (int t = 0; t < 20; ++t) {
        int n = 3 + static_cast<int>(uniform_below(rng, 8));
        PointSet x = generate_random_density(n, Rational(static_cast<long>(1 + uniform_below(rng, 7)), 8), rng());
        for (Rational eps : {Rational(1, 2), Rational(1, 4), Rational(1, 8)}) {
            RefinementTrace tr = find_regular_subspace(x, eps);
            CHECK(tr.final.regular);
            CHECK(is_regular(x, tr.final.subspace, eps).regular);
            CHECK(tr.final.subspace.codim() <= n);
            CHECK(static_cast<int>(tr.steps.size()) == tr.final.subspace.codim());
            int last = 0;
            for (const auto& s : tr.steps) {
                CHECK(s.codim_after == last + 1);
                CHECK(s.bad_mass_before > 0);
                last = s.codim_after;
            }
        }
    }
}
