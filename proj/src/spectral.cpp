#include "gf2lab/spectral.hpp"

#include "gf2lab/errors.hpp"
#include "gf2lab/parallel.hpp"

#include <cstdlib>
#include <stdexcept>
#include <type_traits>

namespace gf2lab {

namespace {

constexpr int kParallelTransformDim = 16;

template <typename T>
std::vector<BigInt> power_and_invert(const Spectrum& s, int k) {
    const int n = s.ambient_dim();
    auto table = s.table();
    std::vector<T> work(table.size());
    for (std::size_t g = 0; g < table.size(); ++g) {
        T base = static_cast<T>(table[g]);
        T acc = 1;
        for (int i = 0; i < k; ++i) acc *= base;
        work[g] = acc;
    }
    walsh_hadamard(std::span<T>(work));
    std::vector<BigInt> out(work.size());
    const T mask = (T(1) << n) - 1;
    for (std::size_t x = 0; x < work.size(); ++x) {
        if (work[x] < 0 || (work[x] & mask) != 0)
            throw std::logic_error("inverse transform is not a nonnegative multiple of 2^n");
        if constexpr (std::is_same_v<T, __int128>)
            out[x] = from_int128(work[x] >> n);
        else
            out[x] = BigInt(work[x] >> n);
    }
    return out;
}

} // namespace

void walsh_hadamard_parallel(std::span<std::int64_t> a) {
    const std::size_t size = a.size();
    std::size_t half = 1;
    // Low stages stay inside 2^12-entry blocks, so run each block whole.
    constexpr std::size_t kBlock = std::size_t{1} << 12;
    if (size <= kBlock || thread_count() <= 1) {
        walsh_hadamard(a);
        return;
    }
    parallel_for(size / kBlock, [&](std::size_t b) { walsh_hadamard(a.subspan(b * kBlock, kBlock)); });
    for (half = kBlock; half < size; half <<= 1) {
        const std::size_t pairs = size / 2;
        parallel_for(pairs / kBlock, [&, half](std::size_t chunk) {
            for (std::size_t p = chunk * kBlock; p < (chunk + 1) * kBlock; ++p) {
                std::size_t i = (p / half) * 2 * half + (p % half);
                std::int64_t u = a[i];
                std::int64_t v = a[i + half];
                a[i] = u + v;
                a[i + half] = u - v;
            }
        });
    }
}

Spectrum correlations(const PointSet& x) {
    const int n = x.ambient_dim();
    check_dim(n);
    auto member = x.membership();
    std::vector<std::int64_t> table(member.begin(), member.end());
    if (n >= kParallelTransformDim)
        walsh_hadamard_parallel(table);
    else
        walsh_hadamard(std::span<std::int64_t>(table));
    return Spectrum(n, std::move(table));
}

bool UniformityReport::is_uniform(const Rational& eps) const {
    if (vacuous) return true;
    return Rational(max_abs_correlation) <= eps * pow2(ambient_dim);
}

UniformityReport uniformity(const Spectrum& s) {
    UniformityReport r;
    r.ambient_dim = s.ambient_dim();
    if (s.ambient_dim() == 0) {
        r.vacuous = true;
        r.epsilon_star = 0;
        return r;
    }
    auto table = s.table();
    for (std::size_t g = 1; g < table.size(); ++g) {
        std::int64_t m = std::llabs(table[g]);
        if (g == 1 || m > r.max_abs_correlation) {
            r.max_abs_correlation = m;
            r.witness = static_cast<Word>(g);
        }
    }
    r.epsilon_star = Rational(BigInt(r.max_abs_correlation), BigInt(1) << s.ambient_dim());
    return r;
}

UniformityReport uniformity(const PointSet& x) { return uniformity(correlations(x)); }

std::vector<BigInt> count_sum_tuples(const PointSet& a, int k) {
    const int n = a.ambient_dim();
    if (k < 1) throw InvalidArgument("tuple length must be at least 1");
    if (k > kMaxTupleLength) throw ScaleError("tuple length above " + std::to_string(kMaxTupleLength));
    if (n > 20) throw ScaleError("tuple counting is capped at n = 20");
    Spectrum s = correlations(a);
    // |c|^k <= 2^(nk), and the transform adds n more bits.
    const int bits = n * (k + 1) + 1;
    if (bits <= 62) return power_and_invert<std::int64_t>(s, k);
    if (bits <= 126) return power_and_invert<__int128>(s, k);
    return power_and_invert<BigInt>(s, k);
}

BigInt count_zero_triples(const PointSet& a1, const PointSet& a2, const PointSet& a3) {
    const int n = a1.ambient_dim();
    if (a2.ambient_dim() != n || a3.ambient_dim() != n)
        throw DimensionMismatch("zero-triple count over sets of different dimension");
    Spectrum s1 = correlations(a1), s2 = correlations(a2), s3 = correlations(a3);
    // Each product is at most 2^(3n) <= 2^72; the sum adds n bits.
    __int128 total = 0;
    for (std::size_t g = 0; g < s1.table().size(); ++g)
        total += static_cast<__int128>(s1.table()[g]) * s2.table()[g] * s3.table()[g];
    if ((total & ((static_cast<__int128>(1) << n) - 1)) != 0)
        throw std::logic_error("zero-triple sum is not divisible by 2^n");
    return from_int128(total >> n);
}

} // namespace gf2lab
