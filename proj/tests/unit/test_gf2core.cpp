#include "helpers.hpp"

#include "gf2lab/errors.hpp"
#include "gf2lab/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

using namespace gf2lab;
using gf2lab::test::w;
using gf2lab::test::words;

TEST_CASE("vectors parse most significant coordinate first") {
    GF2Vector v = GF2Vector::parse("110");
    CHECK(v.bits() == 6);
    CHECK(v.dim() == 3);
    CHECK(v.str() == "110");
    CHECK(dot(GF2Vector::parse("110"), GF2Vector::parse("011")) == 1);
    CHECK((GF2Vector::parse("110") + GF2Vector::parse("011")).str() == "101");
    CHECK_THROWS_AS(GF2Vector::parse("012"), ParseError);
    CHECK_THROWS_AS(GF2Vector(8, 3), InvalidArgument);
    CHECK_THROWS_AS(GF2Vector::parse("10") + GF2Vector::parse("100"), DimensionMismatch);
}

TEST_CASE("bit deposit and extract are inverse on the mask") {
    CHECK(deposit_bits(0b11, 0b1010) == 0b1010);
    CHECK(deposit_bits(0b01, 0b1010) == 0b0010);
    CHECK(extract_bits(0b1110, 0b1010) == 0b11);
    for (Word mask : {0x0U, 0x5U, 0xF0F0U, 0x123456U})
        for (Word v = 0; v < (Word{1} << popcount(mask)); ++v) CHECK(extract_bits(deposit_bits(v, mask), mask) == v);
}

TEST_CASE("rref_span") {
    SUBCASE("empty list spans the zero subspace") {
        Subspace h = rref_span({}, 3);
        CHECK(h.dim() == 0);
        CHECK(h.ambient_dim() == 3);
        CHECK(h.elements() == std::vector<Word>{0});
    }
    SUBCASE("three dependent vectors span a plane") {
        std::vector<GF2Vector> vs{GF2Vector::parse("110"), GF2Vector::parse("011"), GF2Vector::parse("101")};
        Subspace h = rref_span(vs, 3);
        CHECK(h.dim() == 2);
        CHECK(h.elements() == words({"000", "011", "101", "110"}));
        // RREF: pivots 2 and 1, pivot columns cleared elsewhere.
        CHECK(std::vector<Word>(h.basis().begin(), h.basis().end()) == words({"101", "011"}));
    }
    SUBCASE("all of GF(2)^3") {
        std::vector<GF2Vector> vs;
        for (Word v = 0; v < 8; ++v) vs.emplace_back(v, 3);
        CHECK(rref_span(vs, 3).dim() == 3);
        CHECK(rref_span(vs, 3) == Subspace::full(3));
    }
    SUBCASE("mixed dimensions are rejected") {
        std::vector<GF2Vector> vs{GF2Vector::parse("10"), GF2Vector::parse("100")};
        CHECK_THROWS_AS(rref_span(vs, 2), DimensionMismatch);
    }
}

TEST_CASE("rref basis invariants hold for random spans") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(uniform_below(rng, 10));
        std::vector<Word> vs(uniform_below(rng, 8));
        for (auto& v : vs) v = static_cast<Word>(uniform_below(rng, std::uint64_t{1} << n));
        Subspace h = rref_span_words(vs, n);
        auto basis = h.basis();
        for (std::size_t i = 0; i < basis.size(); ++i) {
            CHECK(basis[i] != 0);
            if (i > 0) CHECK(highest_bit(basis[i - 1]) > highest_bit(basis[i]));
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (i != j) CHECK(((basis[j] >> highest_bit(basis[i])) & 1U) == 0);
        }
        for (Word v : vs) CHECK(h.contains_word(v));
        // Order of the input does not matter.
        std::reverse(vs.begin(), vs.end());
        CHECK(rref_span_words(vs, n) == h);
    }
}

TEST_CASE("contains") {
    std::vector<GF2Vector> vs{GF2Vector::parse("110"), GF2Vector::parse("011")};
    Subspace h = rref_span(vs, 3);
    CHECK(contains(Subspace::zero(3), GF2Vector::parse("000")));
    CHECK(contains(h, GF2Vector::parse("101")));
    CHECK_FALSE(contains(h, GF2Vector::parse("100")));
    CHECK_THROWS_AS(contains(h, GF2Vector::parse("10")), DimensionMismatch);
}

TEST_CASE("hyperplane_of") {
    CHECK(hyperplane_of(GF2Vector::parse("100")).elements() == words({"000", "001", "010", "011"}));
    CHECK(hyperplane_of(GF2Vector::parse("111")).elements() == words({"000", "011", "101", "110"}));
    CHECK(hyperplane_of(GF2Vector::parse("01")).elements() == words({"00", "10"}));
    CHECK_THROWS_AS(hyperplane_of(GF2Vector::parse("000")), InvalidArgument);

    for (int n = 1; n <= 6; ++n) {
        std::set<std::vector<Word>> distinct;
        for (Word g = 1; g < (Word{1} << n); ++g) {
            Subspace h = hyperplane_of(GF2Vector(g, n));
            CHECK(h.dim() == n - 1);
            auto elems = h.elements();
            CHECK(elems.size() == (std::size_t{1} << (n - 1)));
            for (Word e : elems) CHECK(dot(g, e) == 0);
            distinct.insert(elems);
        }
        CHECK(distinct.size() == (std::size_t{1} << n) - 1);
    }
}

TEST_CASE("enumerate_subspaces") {
    CHECK(enumerate_subspaces(3, 0).size() == 1);
    CHECK(enumerate_subspaces(3, 1).size() == 7);
    CHECK(enumerate_subspaces(4, 2).size() == 35);
    CHECK(gaussian_binomial(4, 2) == 35);
    for (int n = 0; n <= 5; ++n)
        for (int d = 0; d <= n; ++d) {
            auto subs = enumerate_subspaces(n, d);
            CHECK(subs.size() == gaussian_binomial(n, d));
            std::set<std::vector<Word>> distinct;
            for (const auto& s : subs) {
                CHECK(s.dim() == d);
                distinct.insert(std::vector<Word>(s.basis().begin(), s.basis().end()));
            }
            CHECK(distinct.size() == subs.size());
        }
    CHECK_THROWS_AS(enumerate_subspaces(7, 2), ScaleError);
    CHECK_THROWS_AS(enumerate_subspaces(3, 4), InvalidArgument);
}

TEST_CASE("coset_reps") {
    CHECK(coset_reps(Subspace::full(3)) == std::vector<Word>{0});
    CHECK(coset_reps(Subspace::zero(2)) == words({"00", "01", "10", "11"}));
    std::vector<Word> gen{w("01")};
    CHECK(coset_reps(rref_span_words(gen, 2)) == words({"00", "10"}));

    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(uniform_below(rng, 8));
        std::vector<Word> vs(uniform_below(rng, 5));
        for (auto& v : vs) v = static_cast<Word>(uniform_below(rng, std::uint64_t{1} << n));
        Subspace h = rref_span_words(vs, n);
        auto reps = coset_reps(h);
        CHECK(reps.size() * h.size() == (std::size_t{1} << n));
        CHECK(reps.front() == 0);
        CHECK(std::is_sorted(reps.begin(), reps.end()));
        std::set<Word> covered;
        for (Word r : reps)
            for (Word e : h.elements()) {
                CHECK(r <= (r ^ e)); // minimum of its coset
                covered.insert(r ^ e);
            }
        CHECK(covered.size() == (std::size_t{1} << n));
    }
}

TEST_CASE("section coordinates") {
    SUBCASE("full space is the identity") {
        SectionCoordinates c(Subspace::full(4));
        for (Word v = 0; v < 16; ++v) CHECK(c.forward(v) == v);
    }
    SUBCASE("plane spanned by 110 and 011") {
        std::vector<Word> gen = words({"110", "011"});
        Subspace h = rref_span_words(gen, 3);
        SectionCoordinates c(h);
        // Coordinates follow the canonical basis {101, 011}.
        CHECK(c.forward(w("101")) == w("10"));
        CHECK(c.forward(w("011")) == w("01"));
        CHECK(c.forward(w("110")) == w("11"));
        CHECK_THROWS_AS(c.forward(w("100")), ContainmentError);
    }
    SUBCASE("round trip and linearity on random subspaces") {
        Rng rng(3);
        for (int trial = 0; trial < 100; ++trial) {
            int n = 1 + static_cast<int>(uniform_below(rng, 9));
            std::vector<Word> vs(uniform_below(rng, 6));
            for (auto& v : vs) v = static_cast<Word>(uniform_below(rng, std::uint64_t{1} << n));
            Subspace h = rref_span_words(vs, n);
            SectionCoordinates c(h);
            auto elems = h.elements();
            for (Word e : elems) CHECK(c.backward(c.forward(e)) == e);
            for (Word a : elems)
                for (Word b : elems) CHECK((c.forward(a) ^ c.forward(b)) == c.forward(a ^ b));
            // Lifted characters agree with the section character on H.
            for (Word g = 0; g < h.size(); ++g)
                for (Word e : elems) CHECK(dot(c.lift_character(g), e) == dot(g, c.forward(e)));
        }
    }
}

TEST_CASE("intersect_kernel drops the dimension by one unless gamma vanishes on H") {
    Subspace h = Subspace::full(4);
    Subspace k = h.intersect_kernel(w("1010"));
    CHECK(k.dim() == 3);
    for (Word e : k.elements()) CHECK(dot(e, w("1010")) == 0);
    CHECK(k.intersect_kernel(w("1010")) == k);
}

TEST_CASE("subspace text form") {
    std::vector<Word> gen = words({"1100", "0110"});
    Subspace h = rref_span_words(gen, 4);
    std::string text = format_subspace(h);
    CHECK(text == "1010\n0110\n");
    std::istringstream in(text + "\n0001\n");
    CHECK(parse_subspace(in, 4) == h); // blank line terminates
    std::istringstream bad("101\n");
    CHECK_THROWS_AS(parse_subspace(bad, 4), ParseError);
}
