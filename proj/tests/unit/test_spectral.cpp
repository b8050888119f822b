#include "helpers.hpp"

#include "gf2lab/checks/oracles.hpp"
#include "gf2lab/errors.hpp"
#include "gf2lab/random.hpp"
#include "gf2lab/spectral.hpp"

#include <doctest.h>

#include <numeric>

using namespace gf2lab;
using gf2lab::test::set_of;
using gf2lab::test::w;

namespace {

std::vector<std::int64_t> table_of(const PointSet& x) {
    Spectrum s = correlations(x);
    return {s.table().begin(), s.table().end()};
}

void random_invertible_image(Rng& rng, int n, std::vector<Word>& images) {
    // Fill images with a random basis of GF(2)^n.
    images.clear();
    Subspace span = Subspace::zero(n);
    while (static_cast<int>(images.size()) < n) {
        Word v = static_cast<Word>(uniform_below(rng, std::uint64_t{1} << n));
        if (span.contains_word(v)) continue;
        images.push_back(v);
        span = rref_span_words(images, n);
    }
}

} // namespace

TEST_CASE("correlations") {
    CHECK(table_of(set_of(2, {"01", "10", "11"})) == std::vector<std::int64_t>{3, -1, -1, -1});
    CHECK(table_of(PointSet(3)) == std::vector<std::int64_t>(8, 0));
    auto layer = table_of(generate_affine_layer(3, w("100")));
    CHECK(layer[w("100")] == -4);
    CHECK(layer[0] == 4);
    for (Word g = 1; g < 8; ++g)
        if (g != w("100")) CHECK(layer[g] == 0);
}

TEST_CASE("uniformity") {
    UniformityReport r = uniformity(set_of(2, {"01", "10", "11"}));
    CHECK(r.max_abs_correlation == 1);
    CHECK(r.epsilon_star == Rational(1, 4));
    CHECK(r.witness == 1);
    CHECK(r.is_uniform(Rational(1, 4)));
    CHECK_FALSE(r.is_uniform(Rational(1, 5)));

    UniformityReport layer = uniformity(generate_affine_layer(3, w("100")));
    CHECK(layer.max_abs_correlation == 4);
    CHECK(layer.epsilon_star == Rational(1, 2));
    CHECK(layer.witness == w("100"));

    UniformityReport empty = uniformity(PointSet(3));
    CHECK(empty.max_abs_correlation == 0);
    CHECK(empty.epsilon_star == 0);

    UniformityReport zero_dim = uniformity(PointSet(0));
    CHECK(zero_dim.vacuous);
    CHECK(zero_dim.is_uniform(Rational(1, 1000)));
}

TEST_CASE("spectrum invariants") {
    Rng rng(1);
    for (int t = 0; t < 60; ++t) {
        int n = 1 + static_cast<int>(uniform_below(rng, 10));
        PointSet x = generate_random_density(n, Rational(static_cast<long>(uniform_below(rng, 9)), 8), rng());
        Spectrum s = correlations(x);
        CHECK(s[0] == static_cast<std::int64_t>(x.size()));
        std::int64_t energy = 0;
        for (std::int64_t c : s.table()) {
            energy += c * c;
            CHECK(std::abs(c) <= static_cast<std::int64_t>(x.size()));
        }
        CHECK(energy == static_cast<std::int64_t>(x.space_size() * x.size()));

        for (int probe = 0; probe < 5; ++probe) {
            Word g = static_cast<Word>(uniform_below(rng, x.space_size()));
            CHECK(s[g] == oracle::character_sum(x, g));
            if (g != 0) {
                std::int64_t inside = 0;
                Subspace h = hyperplane_of(GF2Vector(g, n));
                for (Word e : h.elements()) inside += x.contains(e);
                CHECK(s[g] == inside - (static_cast<std::int64_t>(x.size()) - inside));
            }
        }

        // Translation only flips signs.
        Word v = static_cast<Word>(uniform_below(rng, x.space_size()));
        Spectrum moved = correlations(translate(x, v));
        for (Word g = 0; g < x.space_size(); ++g) CHECK(std::abs(moved[g]) == std::abs(s[g]));
        CHECK(uniformity(translate(x, v)).max_abs_correlation == uniformity(x).max_abs_correlation);
    }
}

TEST_CASE("uniformity is invariant under invertible linear maps") {
    Rng rng(2);
    for (int t = 0; t < 30; ++t) {
        int n = 2 + static_cast<int>(uniform_below(rng, 7));
        PointSet x = generate_random_density(n, Rational(1, 3), rng());
        std::vector<Word> images;
        random_invertible_image(rng, n, images);
        std::vector<Word> mapped;
        for (Word e : x.elements()) {
            Word image = 0;
            for (int i = 0; i < n; ++i)
                if ((e >> i) & 1U) image ^= images[static_cast<std::size_t>(i)];
            mapped.push_back(image);
        }
        PointSet y = PointSet::from_words(n, mapped);
        CHECK(uniformity(y).max_abs_correlation == uniformity(x).max_abs_correlation);
    }
}

TEST_CASE("transform applied twice scales by 2^n") {
    Rng rng(4);
    for (int n : {0, 1, 5, 12, 16}) {
        std::vector<std::int64_t> a(std::size_t{1} << n);
        for (auto& v : a) v = static_cast<std::int64_t>(uniform_below(rng, 1000)) - 500;
        auto b = a;
        if (n >= 12) {
            walsh_hadamard_parallel(b);
            walsh_hadamard_parallel(b);
        } else {
            walsh_hadamard(std::span<std::int64_t>(b));
            walsh_hadamard(std::span<std::int64_t>(b));
        }
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i] == a[i] * static_cast<std::int64_t>(a.size()));
    }
}

TEST_CASE("count_sum_tuples") {
    PointSet a = set_of(2, {"01", "10", "11"});
    auto n3 = count_sum_tuples(a, 3);
    CHECK(n3[0] == 6);
    for (Word x = 1; x < 4; ++x) CHECK(n3[x] == 7);
    CHECK(count_sum_tuples(a, 2)[w("11")] == 2);
    CHECK(count_sum_tuples(a, 1)[w("11")] == 1);

    for (int n : {1, 3, 5})
        for (int k : {1, 2, 3, 6}) {
            auto full = count_sum_tuples(PointSet::full(n), k);
            for (const auto& v : full) CHECK(v == pow2(static_cast<std::int64_t>(n) * (k - 1)));
        }

    CHECK_THROWS_AS(count_sum_tuples(a, 0), InvalidArgument);
    CHECK_THROWS_AS(count_sum_tuples(PointSet(21), 3), ScaleError);
}

TEST_CASE("count_sum_tuples matches enumeration and the dp oracle") {
    Rng rng(6);
    for (int t = 0; t < 40; ++t) {
        int n = 1 + static_cast<int>(uniform_below(rng, 6));
        int k = 1 + static_cast<int>(uniform_below(rng, 4));
        PointSet a = generate_random_density(n, Rational(1, 3), rng());
        auto fast = count_sum_tuples(a, k);
        auto brute = oracle::tuple_counts_enumerated(a, k);
        BigInt total = 0;
        for (Word x = 0; x < a.space_size(); ++x) {
            CHECK(fast[x] == BigInt(brute[x]));
            total += fast[x];
        }
        CHECK(total == pow(BigInt(a.size()), static_cast<unsigned>(k)));
    }
    // Wide tuples exercise the 128-bit and arbitrary-precision paths.
    for (int k : {8, 13, 20, 40}) {
        PointSet a = generate_random_density(7, Rational(1, 2), static_cast<std::uint64_t>(k));
        CHECK(count_sum_tuples(a, k) == oracle::tuple_counts_dp(a, k));
    }
}

TEST_CASE("count_zero_triples") {
    PointSet a = set_of(2, {"01", "10", "11"});
    CHECK(count_zero_triples(a, a, a) == 6);
    CHECK(count_zero_triples(a, a, PointSet(2)) == 0);
    CHECK(count_zero_triples(PointSet::full(2), PointSet::full(2), PointSet::full(2)) == 16);
    CHECK_THROWS_AS(count_zero_triples(a, a, PointSet(3)), DimensionMismatch);

    Rng rng(7);
    for (int t = 0; t < 30; ++t) {
        int n = 1 + static_cast<int>(uniform_below(rng, 8));
        PointSet a1 = generate_random_density(n, Rational(1, 2), rng());
        PointSet a2 = generate_random_density(n, Rational(1, 3), rng());
        PointSet a3 = generate_random_density(n, Rational(2, 3), rng());
        CHECK(count_zero_triples(a1, a2, a3) == oracle::zero_triples(a1, a2, a3));
    }
}
