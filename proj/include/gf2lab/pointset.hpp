#pragma once

#include "gf2lab/gf2core.hpp"
#include "gf2lab/rational.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gf2lab {

/// A subset X of GF(2)^n held as a membership table of length 2^n.
class PointSet {
public:
    PointSet() : PointSet(0) {}
    explicit PointSet(int ambient_dim); // empty set

    /// Builds from a membership table of length 2^n (nonzero byte = member).
    PointSet(int ambient_dim, std::vector<std::uint8_t> membership);

    /// Set of the given words; repeats are collapsed.
    static PointSet from_words(int ambient_dim, std::span<const Word> words);
    static PointSet full(int ambient_dim);

    int ambient_dim() const noexcept { return dim_; }
    std::uint64_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    std::uint64_t space_size() const noexcept { return std::uint64_t{1} << dim_; }

    bool contains(Word v) const noexcept { return v < member_.size() && member_[v] != 0; }
    bool contains(const GF2Vector& v) const;

    std::span<const std::uint8_t> membership() const noexcept { return member_; }
    /// Members in increasing order.
    std::vector<Word> elements() const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    int dim_ = 0;
    std::vector<std::uint8_t> member_;
    std::uint64_t size_ = 0;
};

/// H_v(X) expressed in the coordinates of H.
struct SectionResult {
    Subspace subspace;
    Word anchor = 0;
    PointSet points;
};

/// |X| / 2^n.
Rational density(const PointSet& x);

/// X + v.
PointSet translate(const PointSet& x, const GF2Vector& v);
PointSet translate(const PointSet& x, Word v);

/// {coords(h) : h in H, h + v in X}.
SectionResult section(const PointSet& x, const Subspace& h, Word v);
SectionResult section(const PointSet& x, const Subspace& h, const GF2Vector& v);

/// X intersected with H, in H-coordinates.
PointSet restrict_to(const PointSet& x, const Subspace& h);

/// Throws InvalidArgument if 0 is in X (M(X) must be simple).
void require_simple(const PointSet& x, std::string_view who);

// Generators. All exclude 0 and are pure functions of their arguments.

/// Every nonzero vector: PG(n-1, 2).
PointSet generate_projective(int n);
/// {x : <gamma, x> = 1}.
PointSet generate_affine_layer(int n, Word gamma);
/// Each nonzero vector independently with probability p.
PointSet generate_random_density(int n, const Rational& p, std::uint64_t seed);
/// Random greedy insertion over a shuffled order of the nonzero vectors,
/// rejecting any vector that would complete a triple {a, b, a+b}. Stops after
/// `max_size` insertions when given.
PointSet generate_random_triangle_free(int n, std::uint64_t seed, std::uint64_t max_size = UINT64_MAX);

/// Named generator parameters for the `gen` command.
struct GeneratorParams {
    Word gamma = 1;           // affine-layer
    Rational p{1, 2};         // random-density
    std::uint64_t max_size = UINT64_MAX; // random-triangle-free
    std::filesystem::path path;           // from-file
};

/// Dispatches on kind: projective, affine-layer, random-density,
/// random-triangle-free, from-file. Throws InvalidArgument for an unknown kind.
PointSet generate(std::string_view kind, int n, const GeneratorParams& params, std::uint64_t seed);

// .gf2set files: a "n=<dim>" header, then one n-character bit string per
// nonempty line (coordinate 0 last); lines starting with '#' are comments.

std::string format_gf2set(const PointSet& x);
/// Parses .gf2set text. Appends a warning when 0 is present.
PointSet parse_gf2set(std::string_view text, std::vector<std::string>* warnings = nullptr);
PointSet load(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr);
void save(const PointSet& x, const std::filesystem::path& path);

} // namespace gf2lab
