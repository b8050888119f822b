#pragma once

// Exact Fourier analysis on GF(2)^n.
//
// The character sum c_X(gamma) = sum_{x in X} (-1)^<gamma,x> equals
// |X n H| - |X \ H| for the hyperplane H = ker(gamma), so uniformity is read
// straight off the unnormalised Walsh-Hadamard transform of the indicator.

#include "gf2lab/pointset.hpp"
#include "gf2lab/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gf2lab {

/// In-place unnormalised Walsh-Hadamard transform; size must be a power of 2.
/// Applying it twice multiplies every entry by the size.
template <typename T>
void walsh_hadamard(std::span<T> a) {
    const std::size_t size = a.size();
    for (std::size_t half = 1; half < size; half <<= 1)
        for (std::size_t block = 0; block < size; block += 2 * half)
            for (std::size_t i = block; i < block + half; ++i) {
                T u = a[i];
                T v = a[i + half];
                a[i] = u + v;
                a[i + half] = u - v;
            }
}

/// Parallel variant for large tables; identical results.
void walsh_hadamard_parallel(std::span<std::int64_t> a);

class Spectrum {
public:
    Spectrum() = default;
    Spectrum(int ambient_dim, std::vector<std::int64_t> table)
        : dim_(ambient_dim), table_(std::move(table)) {}

    int ambient_dim() const noexcept { return dim_; }
    std::int64_t operator[](Word gamma) const { return table_.at(gamma); }
    std::span<const std::int64_t> table() const noexcept { return table_; }

private:
    int dim_ = 0;
    std::vector<std::int64_t> table_;
};

struct UniformityReport {
    int ambient_dim = 0;
    /// No nonzero character exists (n = 0); U and the witness are undefined.
    bool vacuous = false;
    std::int64_t max_abs_correlation = 0; // U
    Word witness = 0;                     // smallest gamma attaining U
    Rational epsilon_star;                // U / 2^n

    /// U <= eps * 2^n, exactly. Vacuous reports are uniform for every eps.
    bool is_uniform(const Rational& eps) const;
};

/// Character-sum table of X. Throws ScaleError above kMaxDim.
Spectrum correlations(const PointSet& x);

UniformityReport uniformity(const PointSet& x);
UniformityReport uniformity(const Spectrum& s);

/// Largest tuple length accepted by the counting operations.
inline constexpr int kMaxTupleLength = 64;

/// N_k(x) = |S(A, k; x)|, the number of k-tuples over A with sum x, for every
/// x. Computed as the inverse transform of the pointwise k-th power of the
/// spectrum, with a checked exact division by 2^n.
std::vector<BigInt> count_sum_tuples(const PointSet& a, int k);

/// Number of zero-sum triples in A1 x A2 x A3.
BigInt count_zero_triples(const PointSet& a1, const PointSet& a2, const PointSet& a3);

} // namespace gf2lab
