#include "gf2lab/gf2core.hpp"

#include "gf2lab/errors.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

namespace gf2lab {

Word deposit_bits(Word src, Word mask) noexcept {
    Word out = 0;
    for (Word bit = 1; mask; bit <<= 1) {
        Word low = mask & (~mask + 1);
        if (src & bit) out |= low;
        mask ^= low;
    }
    return out;
}

Word extract_bits(Word src, Word mask) noexcept {
    Word out = 0;
    for (Word bit = 1; mask; bit <<= 1) {
        Word low = mask & (~mask + 1);
        if (src & low) out |= bit;
        mask ^= low;
    }
    return out;
}

void check_dim(int n) {
    if (n < 0 || n > kMaxDim)
        throw ScaleError("ambient dimension " + std::to_string(n) + " outside [0, " +
                         std::to_string(kMaxDim) + "]");
}

GF2Vector::GF2Vector(Word bits, int dim) : bits_(bits), dim_(dim) {
    check_dim(dim);
    if (dim < 32 && (bits >> dim) != 0)
        throw InvalidArgument("vector " + std::to_string(bits) + " does not fit in dimension " +
                              std::to_string(dim));
}

GF2Vector GF2Vector::parse(std::string_view text) {
    if (text.size() > static_cast<std::size_t>(kMaxDim))
        throw ScaleError("bit string longer than " + std::to_string(kMaxDim));
    Word bits = 0;
    for (char c : text) {
        if (c != '0' && c != '1') throw ParseError("bad bit string '" + std::string(text) + "'");
        bits = (bits << 1) | static_cast<Word>(c - '0');
    }
    return GF2Vector(bits, static_cast<int>(text.size()));
}

std::string format_bits(Word w, int dim) {
    std::string s(static_cast<std::size_t>(dim), '0');
    for (int i = 0; i < dim; ++i)
        if ((w >> i) & 1U) s[static_cast<std::size_t>(dim - 1 - i)] = '1';
    return s;
}

std::string GF2Vector::str() const { return format_bits(bits_, dim_); }

GF2Vector operator+(GF2Vector a, GF2Vector b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("adding vectors of different dimension");
    return GF2Vector(a.bits_ ^ b.bits_, a.dim_);
}

int dot(GF2Vector a, GF2Vector b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("dot product of vectors of different dimension");
    return dot(a.bits_, b.bits_);
}

std::ostream& operator<<(std::ostream& os, const GF2Vector& v) { return os << v.str(); }

Subspace::Subspace(int ambient_dim, std::vector<Word> rows)
    : ambient_dim_(ambient_dim), basis_(std::move(rows)) {
    for (Word r : basis_) pivots_ |= Word{1} << highest_bit(r);
}

Subspace Subspace::zero(int ambient_dim) {
    check_dim(ambient_dim);
    return Subspace(ambient_dim, {});
}

Subspace Subspace::full(int ambient_dim) {
    check_dim(ambient_dim);
    std::vector<Word> rows;
    for (int i = ambient_dim - 1; i >= 0; --i) rows.push_back(Word{1} << i);
    return Subspace(ambient_dim, std::move(rows));
}

std::vector<GF2Vector> Subspace::basis_vectors() const {
    std::vector<GF2Vector> out;
    out.reserve(basis_.size());
    for (Word r : basis_) out.emplace_back(r, ambient_dim_);
    return out;
}

Word Subspace::reduce(Word v) const noexcept {
    for (Word r : basis_)
        if ((v >> highest_bit(r)) & 1U) v ^= r;
    return v;
}

std::vector<Word> Subspace::elements() const {
    // Coordinates map monotonically onto H, so walking them in order
    // yields the elements sorted.
    SectionCoordinates coords(*this);
    std::vector<Word> out(size());
    for (Word c = 0; c < out.size(); ++c) out[c] = coords.backward(c);
    return out;
}

Subspace Subspace::intersect_kernel(Word gamma) const {
    std::vector<Word> rows(basis_.begin(), basis_.end());
    auto hit = std::find_if(rows.begin(), rows.end(), [&](Word r) { return dot(r, gamma) == 1; });
    if (hit == rows.end()) return *this;
    Word pivot_row = *hit;
    rows.erase(hit);
    for (Word& r : rows)
        if (dot(r, gamma)) r ^= pivot_row;
    return rref_span_words(rows, ambient_dim_);
}

Subspace rref_span_words(std::span<const Word> vectors, int ambient_dim) {
    check_dim(ambient_dim);
    // Echelon rows indexed by pivot, then back-substitute.
    std::vector<Word> by_pivot(static_cast<std::size_t>(ambient_dim), 0);
    for (Word v : vectors) {
        if (ambient_dim < 32 && (v >> ambient_dim) != 0)
            throw DimensionMismatch("vector does not fit in ambient dimension " +
                                    std::to_string(ambient_dim));
        for (int p = ambient_dim - 1; p >= 0 && v; --p) {
            if (!((v >> p) & 1U)) continue;
            auto& slot = by_pivot[static_cast<std::size_t>(p)];
            if (slot == 0) {
                slot = v;
                v = 0;
            } else {
                v ^= slot;
            }
        }
    }
    std::vector<Word> rows;
    for (int p = ambient_dim - 1; p >= 0; --p)
        if (by_pivot[static_cast<std::size_t>(p)]) rows.push_back(by_pivot[static_cast<std::size_t>(p)]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Word bit = Word{1} << highest_bit(rows[i]);
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (j != i && (rows[j] & bit)) rows[j] ^= rows[i];
    }
    return Subspace(ambient_dim, std::move(rows));
}

Subspace rref_span(std::span<const GF2Vector> vectors, int ambient_dim) {
    std::vector<Word> words;
    words.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.dim() != ambient_dim)
            throw DimensionMismatch("span of vectors with mixed ambient dimensions");
        words.push_back(v.bits());
    }
    return rref_span_words(words, ambient_dim);
}

bool contains(const Subspace& h, const GF2Vector& v) {
    if (h.ambient_dim() != v.dim()) throw DimensionMismatch("subspace and vector dimensions differ");
    return h.contains_word(v.bits());
}

Subspace hyperplane_of(const GF2Vector& gamma) {
    if (gamma.is_zero()) throw InvalidArgument("the zero character has no hyperplane");
    return Subspace::full(gamma.dim()).intersect_kernel(gamma.bits());
}

void for_each_subspace(int n, int d, const std::function<void(const Subspace&)>& visit) {
    if (n < 0 || d < 0 || d > n) throw InvalidArgument("need 0 <= d <= n");
    if (n > kMaxEnumerationDim)
        throw ScaleError("subspace enumeration is capped at n = " + std::to_string(kMaxEnumerationDim));
    // Choose pivot positions, then the free bits of each row: the bits below
    // its pivot that are not themselves pivots.
    for (Word pivots = 0; pivots < (Word{1} << n); ++pivots) {
        if (popcount(pivots) != d) continue;
        std::vector<Word> pivot_bits;
        for (int p = n - 1; p >= 0; --p)
            if ((pivots >> p) & 1U) pivot_bits.push_back(Word{1} << p);
        std::vector<Word> free_masks;
        int total_free = 0;
        for (Word pb : pivot_bits) {
            Word m = (pb - 1) & ~pivots;
            free_masks.push_back(m);
            total_free += popcount(m);
        }
        for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << total_free); ++choice) {
            std::vector<Word> rows;
            std::uint64_t rest = choice;
            for (std::size_t i = 0; i < pivot_bits.size(); ++i) {
                int width = popcount(free_masks[i]);
                Word fill = deposit_bits(static_cast<Word>(rest & ((std::uint64_t{1} << width) - 1)),
                                         free_masks[i]);
                rest >>= width;
                rows.push_back(pivot_bits[i] | fill);
            }
            visit(rref_span_words(rows, n));
        }
    }
}

std::vector<Subspace> enumerate_subspaces(int n, int d) {
    std::vector<Subspace> out;
    for_each_subspace(n, d, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

std::uint64_t gaussian_binomial(int n, int d) {
    if (d < 0 || d > n) return 0;
    std::uint64_t num = 1, den = 1;
    for (int i = 0; i < d; ++i) {
        num *= (std::uint64_t{1} << (n - i)) - 1;
        den *= (std::uint64_t{1} << (i + 1)) - 1;
    }
    return num / den;
}

std::vector<Word> coset_reps(const Subspace& h) {
    Word complement = static_cast<Word>((std::uint64_t{1} << h.ambient_dim()) - 1) & ~h.pivot_mask();
    std::vector<Word> reps(std::size_t{1} << h.codim());
    for (Word i = 0; i < reps.size(); ++i) reps[i] = deposit_bits(i, complement);
    return reps;
}

SectionCoordinates::SectionCoordinates(const Subspace& h)
    : ambient_dim_(h.ambient_dim()), dim_(h.dim()), pivots_(h.pivot_mask()) {
    auto basis = h.basis();
    rows_.resize(basis.size());
    // basis is ordered by decreasing pivot; coordinate j belongs to the row
    // with the j-th smallest pivot.
    for (std::size_t i = 0; i < basis.size(); ++i) rows_[basis.size() - 1 - i] = basis[i];
}

Word SectionCoordinates::forward(Word h) const {
    Word c = extract_bits(h, pivots_);
    if (backward(c) != h)
        throw ContainmentError("vector " + format_bits(h, ambient_dim_) + " is not in the subspace");
    return c;
}

Word SectionCoordinates::backward(Word c) const noexcept {
    Word h = 0;
    for (std::size_t j = 0; c; ++j, c >>= 1)
        if (c & 1U) h ^= rows_[j];
    return h;
}

GF2Vector SectionCoordinates::forward(const GF2Vector& h) const {
    if (h.dim() != ambient_dim_) throw DimensionMismatch("vector and subspace dimensions differ");
    return GF2Vector(forward(h.bits()), dim_);
}

GF2Vector SectionCoordinates::backward(const GF2Vector& c) const {
    if (c.dim() != dim_) throw DimensionMismatch("coordinate vector has the wrong dimension");
    return GF2Vector(backward(c.bits()), ambient_dim_);
}

std::string format_subspace(const Subspace& h) {
    std::string out;
    for (Word r : h.basis()) out += format_bits(r, h.ambient_dim()) + "\n";
    return out;
}

Subspace parse_subspace(std::istream& in, int ambient_dim) {
    check_dim(ambient_dim);
    std::vector<Word> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) break;
        if (line.front() == '#') continue;
        GF2Vector v = GF2Vector::parse(line);
        if (v.dim() != ambient_dim)
            throw ParseError("basis line '" + line + "' does not have " + std::to_string(ambient_dim) +
                             " characters");
        rows.push_back(v.bits());
    }
    return rref_span_words(rows, ambient_dim);
}

} // namespace gf2lab
