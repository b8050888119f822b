#pragma once

// Brute-force reference computations. They follow the definitions directly
// and share no code path with the fast routines they are used to check.

#include "gf2lab/pointset.hpp"
#include "gf2lab/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace gf2lab::oracle {

/// c_X(gamma) as |X n ker gamma| - |X \ ker gamma|, by counting.
std::int64_t character_sum(const PointSet& x, Word gamma);

/// Histogram of sums over every tuple in A^k, visiting all |A|^k tuples.
std::vector<std::uint64_t> tuple_counts_enumerated(const PointSet& a, int k);

/// Tuple counts by dynamic programming over prefix sums:
/// count_j(y) = sum_{a in A} count_{j-1}(y + a).
std::vector<BigInt> tuple_counts_dp(const PointSet& a, int k);

/// |S_0(A, k; x)| by visiting every tuple with sum x and scanning all of its
/// proper nonempty position subsets.
std::uint64_t degenerate_count(const PointSet& a, int k, Word x);

/// Circuit test by scanning every proper nonempty subset.
bool is_circuit(std::span<const Word> elements);

/// Number of k-circuits through x by scanning all (k-1)-subsets of X \ {x}.
std::uint64_t circuits_through(const PointSet& x_set, Word x, int k);

/// Zero-sum triples by scanning A1 x A2.
BigInt zero_triples(const PointSet& a1, const PointSet& a2, const PointSet& a3);

/// Minimum codimension of a subspace disjoint from X, over every subspace
/// listed by enumerate_subspaces.
int critical_number(const PointSet& x);

/// Cubic scan for three distinct members with zero sum.
bool has_zero_sum_triple(const PointSet& x);

} // namespace gf2lab::oracle
