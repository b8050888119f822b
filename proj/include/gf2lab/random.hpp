#pragma once

// Reproducible randomness. Every generator stream is a std::mt19937_64 whose
// output sequence is fixed by the C++ standard; seeds for sub-streams are
// derived with SplitMix64. Bounded draws use rejection sampling instead of
// the standard distributions, whose outputs differ between library vendors.

#include "gf2lab/rational.hpp"

#include <cstdint>
#include <random>

namespace gf2lab {

using Rng = std::mt19937_64;

/// One SplitMix64 step.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed of sub-stream `index` of the stream seeded by `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Coin with success probability p (0 <= p <= 1) at 2^-64 resolution: a
/// draw u uniform in [0, 2^64) succeeds iff u < floor(p * 2^64).
class Bernoulli {
public:
    explicit Bernoulli(const Rational& p);
    bool operator()(Rng& rng) const {
        std::uint64_t u = rng();
        return always_ || u < threshold_;
    }

private:
    std::uint64_t threshold_ = 0;
    bool always_ = false;
};

} // namespace gf2lab
