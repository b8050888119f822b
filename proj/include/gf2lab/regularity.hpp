#pragma once

// Regularity of a subspace H with respect to (V, X): for all but eps*|V|
// anchors v, the section H_v(X) is eps-uniform in H. Uniformity of a section
// only depends on the coset of v, so one representative per coset is checked
// and each bad coset weighs |H| anchors.

#include "gf2lab/pointset.hpp"
#include "gf2lab/rational.hpp"

#include <cstdint>
#include <vector>

namespace gf2lab {

struct BadCoset {
    Word representative = 0;      // minimum of the coset
    Word witness = 0;             // section character, in H-coordinates
    std::int64_t correlation = 0; // |c| of the section at the witness
};

struct RegularityCert {
    Subspace subspace;
    Rational epsilon;
    bool regular = false;
    std::vector<BadCoset> bad_cosets;
    BigInt bad_mass; // (number of bad cosets) * |H|
};

struct RefinementStep {
    Word character = 0;   // character of V whose kernel was intersected
    int codim_after = 0;
    BigInt bad_mass_before;
};

struct RefinementTrace {
    std::vector<RefinementStep> steps;
    RegularityCert final;
};

/// Exact regularity check. Throws InvalidArgument for eps <= 0 and
/// DimensionMismatch for mismatched dimensions.
RegularityCert is_regular(const PointSet& x, const Subspace& h, const Rational& eps);

/// Starting from H = V, refines H by the kernel of the most frequent lifted
/// bad-coset witness (ties to the smallest) until the checker certifies it.
/// Terminates after at most n steps because a 0-dimensional H is regular.
RefinementTrace find_regular_subspace(const PointSet& x, const Rational& eps);

} // namespace gf2lab
