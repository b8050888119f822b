#pragma once

// Exact linear algebra over GF(2): vectors as machine words, subspaces in
// reduced row echelon form, cosets, characters, and subspace enumeration.
//
// Coordinate i of a vector is bit i of its word. Text forms print the most
// significant coordinate first, so "110" is the word 6.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gf2lab {

using Word = std::uint32_t;

inline constexpr int kMaxDim = 24;           // vector ops and 2^n tables
inline constexpr int kMaxEnumerationDim = 6; // exhaustive subspace enumeration

inline int parity(Word w) noexcept { return __builtin_parity(w); }
inline int popcount(Word w) noexcept { return __builtin_popcount(w); }
inline int dot(Word u, Word v) noexcept { return parity(u & v); }
inline int highest_bit(Word w) noexcept { return 31 - __builtin_clz(w); }

/// Scatters the low bits of `src` into the set positions of `mask`.
Word deposit_bits(Word src, Word mask) noexcept;
/// Gathers the bits of `src` at the set positions of `mask` into the low bits.
Word extract_bits(Word src, Word mask) noexcept;

/// Throws ScaleError unless 0 <= n <= kMaxDim.
void check_dim(int n);

/// An element of GF(2)^n. Also used as a character x -> <gamma, x>.
class GF2Vector {
public:
    GF2Vector() = default;
    GF2Vector(Word bits, int dim);

    /// Parses an n-character 0/1 string, most significant coordinate first.
    static GF2Vector parse(std::string_view text);

    Word bits() const noexcept { return bits_; }
    int dim() const noexcept { return dim_; }
    bool is_zero() const noexcept { return bits_ == 0; }

    std::string str() const;

    friend GF2Vector operator+(GF2Vector a, GF2Vector b);
    friend int dot(GF2Vector a, GF2Vector b);
    friend bool operator==(const GF2Vector&, const GF2Vector&) = default;
    friend auto operator<=>(const GF2Vector&, const GF2Vector&) = default;

private:
    Word bits_ = 0;
    int dim_ = 0;
};

std::ostream& operator<<(std::ostream& os, const GF2Vector& v);

/// n-character 0/1 string of `w`, most significant coordinate first.
std::string format_bits(Word w, int dim);

/// A subspace of GF(2)^n held as its canonical reduced row echelon basis.
///
/// The pivot of a row is its highest set bit. Rows are ordered by strictly
/// decreasing pivot (left to right in the text form), and every pivot bit is
/// clear in all other rows. Two subspaces are equal iff their bases are.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(int ambient_dim);
    static Subspace full(int ambient_dim);

    int ambient_dim() const noexcept { return ambient_dim_; }
    int dim() const noexcept { return static_cast<int>(basis_.size()); }
    int codim() const noexcept { return ambient_dim_ - dim(); }
    std::uint64_t size() const noexcept { return std::uint64_t{1} << dim(); }

    std::span<const Word> basis() const noexcept { return basis_; }
    std::vector<GF2Vector> basis_vectors() const;
    /// OR of the pivot bits of the basis rows.
    Word pivot_mask() const noexcept { return pivots_; }

    /// Clears every pivot bit of `v` using the basis; the result is the
    /// minimum element of the coset v + H.
    Word reduce(Word v) const noexcept;
    bool contains_word(Word v) const noexcept { return reduce(v) == 0; }

    /// All 2^dim elements, in increasing order.
    std::vector<Word> elements() const;

    /// Subspace of this one annihilated by the character `gamma`.
    Subspace intersect_kernel(Word gamma) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    friend Subspace rref_span(std::span<const GF2Vector> vectors, int ambient_dim);
    friend Subspace rref_span_words(std::span<const Word> vectors, int ambient_dim);

    Subspace(int ambient_dim, std::vector<Word> rows);

    int ambient_dim_ = 0;
    std::vector<Word> basis_;
    Word pivots_ = 0;
};

/// Span of `vectors` in canonical form. `ambient_dim` is used when the list
/// is empty; otherwise every vector must have that dimension.
Subspace rref_span(std::span<const GF2Vector> vectors, int ambient_dim);
Subspace rref_span_words(std::span<const Word> vectors, int ambient_dim);

/// True iff v lies in H. Throws DimensionMismatch.
bool contains(const Subspace& h, const GF2Vector& v);

/// {v : <gamma, v> = 0}. Throws InvalidArgument for gamma = 0.
Subspace hyperplane_of(const GF2Vector& gamma);

/// Calls `visit` once for every d-dimensional subspace of GF(2)^n.
/// Requires 0 <= d <= n <= kMaxEnumerationDim.
void for_each_subspace(int n, int d, const std::function<void(const Subspace&)>& visit);
std::vector<Subspace> enumerate_subspaces(int n, int d);

/// Number of d-dimensional subspaces of GF(2)^n (Gaussian binomial).
std::uint64_t gaussian_binomial(int n, int d);

/// One vector per coset of H, each the minimum of its coset, in increasing
/// order. The first representative is 0.
std::vector<Word> coset_reps(const Subspace& h);

/// Linear bijection between H and GF(2)^(dim H) sending the basis row with
/// the i-th largest pivot to the i-th largest coordinate. The coordinates of
/// h are read off its pivot bits, so the map preserves integer order.
class SectionCoordinates {
public:
    explicit SectionCoordinates(const Subspace& h);

    int dim() const noexcept { return dim_; }
    int ambient_dim() const noexcept { return ambient_dim_; }

    /// Coordinates of h in H. Throws ContainmentError if h is not in H.
    Word forward(Word h) const;
    Word forward_unchecked(Word h) const noexcept { return extract_bits(h, pivots_); }
    /// Element of H with coordinates c.
    Word backward(Word c) const noexcept;

    GF2Vector forward(const GF2Vector& h) const;
    GF2Vector backward(const GF2Vector& c) const;

    /// Character of V that agrees with the section character `gamma` on H and
    /// vanishes on the coordinate complement spanned by the non-pivot unit
    /// vectors.
    Word lift_character(Word gamma) const noexcept { return deposit_bits(gamma, pivots_); }

private:
    int ambient_dim_ = 0;
    int dim_ = 0;
    Word pivots_ = 0;
    std::vector<Word> rows_; // rows_[j] is the element with coordinates 1 << j
};

/// Subspace text form: one basis vector per line, blank line terminates.
std::string format_subspace(const Subspace& h);
Subspace parse_subspace(std::istream& in, int ambient_dim);

} // namespace gf2lab
