#include "gf2lab/critical.hpp"

#include "gf2lab/errors.hpp"
#include "gf2lab/spectral.hpp"

#include <vector>

namespace gf2lab {

namespace {

/// Upper bounds on how many more generators can be drawn from a suffix of
/// the candidate list (sorted, so highest bits are nondecreasing). A
/// subspace spanned by e later generators with pivots h_1 < ... < h_e has
/// exactly 2^(j-1) nonzero elements with highest bit h_j, and all of them are
/// candidates. bound[i] covers suffixes starting inside group i; the first
/// group then always contributes its own pivot.
struct GroupBounds {
    std::vector<std::size_t> starts; // first index of each highest-bit group
    std::vector<int> bound;

    explicit GroupBounds(const std::vector<Word>& c) {
        std::vector<std::size_t> sizes;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (i == 0 || highest_bit(c[i]) != highest_bit(c[i - 1])) {
                starts.push_back(i);
                sizes.push_back(0);
            }
        for (std::size_t i = 0, g = 0; i < c.size(); ++i) {
            if (g + 1 < starts.size() && i == starts[g + 1]) ++g;
            ++sizes[g];
        }
        bound.resize(starts.size());
        for (std::size_t g = 0; g < starts.size(); ++g) {
            int e = 1;
            for (std::size_t h = g + 1; h < starts.size(); ++h)
                if (sizes[h] >= (std::size_t{1} << e)) ++e;
            bound[g] = e;
        }
    }
};

/// Membership table over GF(2)^n packed 64 entries per word.
class BitTable {
public:
    explicit BitTable(int n) : words_(n >= 6 ? std::size_t{1} << (n - 6) : 1, 0) {}
    bool test(Word r) const { return (words_[r >> 6] >> (r & 63)) & 1U; }
    void set(Word r) { words_[r >> 6] |= std::uint64_t{1} << (r & 63); }

    /// this[r] = t[r] && t[r ^ g] for every r.
    void assign_and_shifted(const BitTable& t, Word g) {
        const std::size_t high = g >> 6;
        const unsigned low = g & 63;
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] = t.words_[w] & permute(t.words_[w ^ high], low);
    }

private:
    // Bit i of the result is bit i ^ low of x.
    static std::uint64_t permute(std::uint64_t x, unsigned low) {
        static constexpr std::uint64_t kMasks[6] = {0x5555555555555555ULL, 0x3333333333333333ULL,
                                                    0x0F0F0F0F0F0F0F0FULL, 0x00FF00FF00FF00FFULL,
                                                    0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
        for (unsigned b = 0; b < 6; ++b)
            if ((low >> b) & 1U) {
                const unsigned shift = 1U << b;
                x = ((x & kMasks[b]) << shift) | ((x >> shift) & kMasks[b]);
            }
        return x;
    }

    std::vector<std::uint64_t> words_;
};

/// Depth-first search state for the exact solver.
///
/// At a node with span W (pivot mask P), good[r] for every r with r & P == 0
/// records whether the coset r + W avoids X. Children add a generator g that
/// is good, reduced (g & P == 0) and larger than the previous generator;
/// because both r and g are reduced, the child's table is
/// good'[r] = good[r] && good[r ^ g]. Entries at non-reduced r are never read.
class ExactSearch {
public:
    ExactSearch(const PointSet& x, int incumbent_dim, std::vector<Word> incumbent)
        : n_(x.ambient_dim()), best_dim_(incumbent_dim), best_basis_(std::move(incumbent)) {
        BitTable good(n_);
        for (Word r = 0; r < x.space_size(); ++r)
            if (!x.contains(r)) good.set(r);
        levels_.push_back(std::move(good));
    }

    void run() {
        std::vector<Word> candidates;
        for (Word r = 1; r < (Word{1} << n_); ++r)
            if (levels_[0].test(r)) candidates.push_back(r);
        expand(0, candidates);
    }

    int best_dim() const { return best_dim_; }
    const std::vector<Word>& best_basis() const { return best_basis_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void expand(int depth, const std::vector<Word>& candidates) {
        ++nodes_;
        if (depth > best_dim_) {
            best_dim_ = depth;
            best_basis_ = gens_;
        }
        if (candidates.empty()) return;
        // Later generators have increasing pivots above every current one, so
        // each nonzero element they span is itself a candidate.
        const GroupBounds bounds(candidates);
        if (static_cast<int>(levels_.size()) <= depth + 1) levels_.emplace_back(n_);
        std::size_t group = 0;
        for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
            if (group + 1 < bounds.starts.size() && ci == bounds.starts[group + 1]) ++group;
            if (depth + bounds.bound[group] <= best_dim_) return;
            const Word g = candidates[ci];
            const auto& good = levels_[static_cast<std::size_t>(depth)];
            auto& next = levels_[static_cast<std::size_t>(depth) + 1];
            next.assign_and_shifted(good, g);
            const Word child_pivot = Word{1} << highest_bit(g);
            std::vector<Word> child;
            for (std::size_t cj = ci + 1; cj < candidates.size(); ++cj)
                if ((candidates[cj] & child_pivot) == 0 && next.test(candidates[cj])) child.push_back(candidates[cj]);
            gens_.push_back(g);
            expand(depth + 1, child);
            gens_.pop_back();
        }
    }

    int n_;
    int best_dim_;
    std::vector<Word> best_basis_;
    std::vector<Word> gens_;
    std::vector<BitTable> levels_;
    std::uint64_t nodes_ = 0;
};

} // namespace

std::string_view to_string(CriticalMethod m) { return m == CriticalMethod::exact ? "exact" : "greedy"; }

CriticalResult greedy_cover(const PointSet& x) {
    require_simple(x, "greedy_cover");
    const int n = x.ambient_dim();
    std::vector<std::uint8_t> remaining(x.membership().begin(), x.membership().end());
    std::uint64_t left = x.size();
    Subspace witness = Subspace::full(n);
    CriticalResult result;
    result.method = CriticalMethod::greedy;
    while (left > 0) {
        // Points covered by gamma: (|R| - c_R(gamma)) / 2.
        PointSet r(n, remaining);
        Spectrum s = correlations(r);
        Word best = 0;
        std::int64_t best_cover = -1;
        for (Word g = 1; g < s.table().size(); ++g) {
            std::int64_t cover = (static_cast<std::int64_t>(left) - s[g]) / 2;
            if (cover > best_cover) {
                best_cover = cover;
                best = g;
            }
        }
        ++result.nodes_expanded;
        for (Word v = 0; v < remaining.size(); ++v)
            if (remaining[v] && dot(best, v)) {
                remaining[v] = 0;
                --left;
            }
        witness = witness.intersect_kernel(best);
        ++result.value;
    }
    result.witness = witness;
    return result;
}

CriticalResult critical_number(const PointSet& x) {
    require_simple(x, "critical_number");
    const int n = x.ambient_dim();
    if (n > kMaxCriticalDim)
        throw ScaleError("exact critical number is capped at n = " + std::to_string(kMaxCriticalDim));
    CriticalResult greedy = greedy_cover(x);
    auto basis = greedy.witness.basis();
    ExactSearch search(x, greedy.witness.dim(), std::vector<Word>(basis.begin(), basis.end()));
    search.run();
    CriticalResult result;
    result.method = CriticalMethod::exact;
    result.witness = rref_span_words(search.best_basis(), n);
    result.value = n - result.witness.dim();
    result.nodes_expanded = search.nodes();
    return result;
}

} // namespace gf2lab
