#pragma once

// Circuits of the binary matroid M(X) represented by a point set X with
// 0 not in X, and counts of degenerate sum tuples.

#include "gf2lab/pointset.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace gf2lab {

struct Circuit {
    std::vector<Word> elements; // sorted, distinct

    friend bool operator==(const Circuit&, const Circuit&) = default;
};

struct CircuitCensus {
    int k = 0;
    int ambient_dim = 0;
    std::vector<Word> elements;          // members of X, increasing
    std::vector<std::uint64_t> counts;   // counts[i] = k-circuits through elements[i]
    std::uint64_t max_count = 0;
    Word max_witness = 0;                // smallest element attaining max_count

    std::uint64_t total_incidences() const;
};

inline constexpr int kMinCircuitSize = 3;
inline constexpr int kMaxCircuitSize = 7;
/// Cap on C(|X|-1, k-2), the leaf count of one circuits_through search.
inline constexpr std::uint64_t kCircuitSearchBudget = std::uint64_t{1} << 32;
/// Cap on |A|^(k-1) * 2^k for the degenerate-tuple enumerations.
inline constexpr std::uint64_t kTupleEnumerationBudget = std::uint64_t{1} << 36;

/// True iff the elements XOR to 0 and no proper nonempty subset does.
/// Throws InvalidArgument if an element is 0 or repeated.
bool is_circuit(std::span<const Word> elements);

/// Every k-element circuit of M(X) containing x, each once, in lexicographic
/// order. Requires x in X, 0 not in X, kMinCircuitSize <= k <= kMaxCircuitSize.
std::vector<Circuit> circuits_through(const PointSet& x_set, Word x, int k);
std::uint64_t count_circuits_through(const PointSet& x_set, Word x, int k);

/// Circuit counts through every element of X.
CircuitCensus census(const PointSet& x_set, int k);

/// |S_0(A, k; x)|: k-tuples over A with sum x having a proper nonempty
/// zero-sum sub-tuple. Enumerates every tuple.
std::uint64_t count_degenerate_tuples(const PointSet& a, int k, Word x);

/// |S_0(A, k; x)| for every x at once.
std::vector<std::uint64_t> degenerate_tuple_table(const PointSet& a, int k);

} // namespace gf2lab
