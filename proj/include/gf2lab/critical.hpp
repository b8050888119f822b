#pragma once

#include "gf2lab/pointset.hpp"

#include <cstdint>
#include <string_view>

namespace gf2lab {

enum class CriticalMethod { exact, greedy };

std::string_view to_string(CriticalMethod m);

struct CriticalResult {
    int value = 0;          // codimension of the witness
    Subspace witness;       // disjoint from X
    CriticalMethod method = CriticalMethod::exact;
    std::uint64_t nodes_expanded = 0;
};

inline constexpr int kMaxCriticalDim = 14;

/// Minimum codimension of a subspace disjoint from X, with a witness.
/// Branch and bound over canonical bases: generators are increasing, each is
/// the minimum of its coset modulo the span so far, and the span stays
/// disjoint from X. Throws InvalidArgument if 0 is in X.
CriticalResult critical_number(const PointSet& x);

/// Greedy cocycle cover: repeatedly take the character covering the most
/// remaining points (ties to the smallest), until X is covered. The witness
/// is the intersection of the chosen kernels.
CriticalResult greedy_cover(const PointSet& x);

} // namespace gf2lab
