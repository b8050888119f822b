#include "gf2lab/random.hpp"

#include "gf2lab/errors.hpp"

namespace gf2lab {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw InvalidArgument("uniform_below needs a positive bound");
    std::uint64_t limit = -bound % bound; // 2^64 mod bound
    for (;;) {
        std::uint64_t u = rng();
        if (u >= limit) return u % bound;
    }
}

Bernoulli::Bernoulli(const Rational& p) {
    if (p < 0 || p > 1) throw InvalidArgument("probability " + to_string(p) + " outside [0, 1]");
    always_ = p == 1;
    if (!always_) threshold_ = static_cast<std::uint64_t>((numerator(p) << 64) / denominator(p));
}

} // namespace gf2lab
