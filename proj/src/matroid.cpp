#include "gf2lab/matroid.hpp"

#include "gf2lab/errors.hpp"
#include "gf2lab/parallel.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

namespace gf2lab {

namespace {

/// Small echelon basis with highest-bit pivots; reduce() returns 0 iff the
/// vector is in the span.
struct Echelon {
    Word rows[32];
    int size = 0;

    Word reduce(Word v) const noexcept {
        for (int i = 0; i < size; ++i)
            if ((v >> highest_bit(rows[i])) & 1U) v ^= rows[i];
        return v;
    }
    void push(Word reduced) noexcept {
        // Keep rows sorted by decreasing pivot so one pass of reduce() works.
        int i = size++;
        while (i > 0 && highest_bit(rows[i - 1]) < highest_bit(reduced)) {
            rows[i] = rows[i - 1];
            --i;
        }
        rows[i] = reduced;
    }
};

/// Saturating binomial coefficient.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t saturating_pow(std::uint64_t base, int e) {
    unsigned __int128 acc = 1;
    for (int i = 0; i < e; ++i) {
        acc *= base;
        if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

void check_circuit_args(const PointSet& x_set, int k) {
    require_simple(x_set, "circuit enumeration");
    if (k < kMinCircuitSize || k > kMaxCircuitSize)
        throw InvalidArgument("circuit size must lie in [" + std::to_string(kMinCircuitSize) + ", " +
                              std::to_string(kMaxCircuitSize) + "]");
    std::uint64_t m = x_set.size() > 0 ? x_set.size() - 1 : 0;
    if (binomial(m, static_cast<std::uint64_t>(k - 2)) > kCircuitSearchBudget)
        throw ScaleError("circuit enumeration exceeds the search budget");
}

/// Visits every increasing (k-1)-subset of others that is independent and
/// sums to x, i.e. every k-circuit through x minus x itself.
void search_circuits(const PointSet& x_set, const std::vector<Word>& others, Word x, int k,
                     const std::function<void(const Word*, int)>& visit) {
    const int need = k - 1;
    std::vector<Word> chosen(static_cast<std::size_t>(need));
    // Element index lookup for the determined last element.
    std::function<void(std::size_t, int, Word, const Echelon&)> dfs =
        [&](std::size_t start, int depth, Word running, const Echelon& basis) {
            if (depth == need - 1) {
                Word last = running ^ x;
                if (last == x || !x_set.contains(last)) return;
                if (depth > 0 && last <= chosen[static_cast<std::size_t>(depth - 1)]) return;
                if (basis.reduce(last) == 0) return;
                chosen[static_cast<std::size_t>(depth)] = last;
                visit(chosen.data(), need);
                return;
            }
            const std::size_t remaining = static_cast<std::size_t>(need - depth);
            for (std::size_t i = start; i + remaining <= others.size(); ++i) {
                Word v = others[i];
                Word r = basis.reduce(v);
                if (r == 0) continue;
                Echelon next = basis;
                next.push(r);
                chosen[static_cast<std::size_t>(depth)] = v;
                dfs(i + 1, depth + 1, running ^ v, next);
            }
        };
    dfs(0, 0, 0, Echelon{});
}

std::vector<Word> others_of(const PointSet& x_set, Word x) {
    std::vector<Word> others = x_set.elements();
    others.erase(std::remove(others.begin(), others.end(), x), others.end());
    return others;
}

/// Calls visit(prefix_sum, degenerate, subset_sums) for every (len)-tuple
/// over the elements of A. subset_sums holds the sums of all 2^len subsets
/// of the tuple positions, indexed by position mask; it is only filled while
/// the prefix is non-degenerate.
void for_each_prefix(const std::vector<Word>& elems, int len,
                     const std::function<void(Word, bool, const std::vector<Word>&)>& visit) {
    std::vector<Word> sums(std::size_t{1} << len, 0);
    std::function<void(int, Word, bool)> dfs = [&](int depth, Word running, bool degenerate) {
        if (depth == len) {
            visit(running, degenerate, sums);
            return;
        }
        const std::size_t width = std::size_t{1} << depth;
        for (Word w : elems) {
            bool deg = degenerate;
            if (!deg) {
                // w completes a zero-sum sub-tuple iff it equals a subset sum
                // of the earlier positions (the empty sum covers w = 0).
                for (std::size_t m = 0; m < width && !deg; ++m) deg = sums[m] == w;
                if (!deg)
                    for (std::size_t m = 0; m < width; ++m) sums[width + m] = sums[m] ^ w;
            }
            dfs(depth + 1, running ^ w, deg);
        }
    };
    dfs(0, 0, false);
}

void check_tuple_args(const PointSet& a, int k) {
    if (k < 1) throw InvalidArgument("tuple length must be at least 1");
    if (k > 16) throw ScaleError("degenerate-tuple enumeration is capped at k = 16");
    std::uint64_t cost = saturating_pow(a.size(), k - 1);
    if (cost > (kTupleEnumerationBudget >> k))
        throw ScaleError("degenerate-tuple enumeration exceeds the budget |A|^(k-1) * 2^k <= 2^36");
}

} // namespace

std::uint64_t CircuitCensus::total_incidences() const {
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

bool is_circuit(std::span<const Word> elements) {
    std::set<Word> seen;
    Word total = 0;
    for (Word w : elements) {
        if (w == 0) throw InvalidArgument("a circuit of a simple matroid cannot contain 0");
        if (!seen.insert(w).second) throw InvalidArgument("circuit elements must be distinct");
        total ^= w;
    }
    if (elements.empty() || total != 0) return false;
    // With total sum 0, C is a circuit iff C minus one element is independent.
    Echelon basis;
    for (std::size_t i = 0; i + 1 < elements.size(); ++i) {
        Word r = basis.reduce(elements[i]);
        if (r == 0) return false;
        basis.push(r);
    }
    return true;
}

std::vector<Circuit> circuits_through(const PointSet& x_set, Word x, int k) {
    check_circuit_args(x_set, k);
    if (!x_set.contains(x)) throw InvalidArgument("element " + format_bits(x, x_set.ambient_dim()) + " is not in X");
    std::vector<Circuit> out;
    search_circuits(x_set, others_of(x_set, x), x, k, [&](const Word* picked, int count) {
        Circuit c{std::vector<Word>(picked, picked + count)};
        c.elements.push_back(x);
        std::sort(c.elements.begin(), c.elements.end());
        out.push_back(std::move(c));
    });
    std::sort(out.begin(), out.end(), [](const Circuit& a, const Circuit& b) { return a.elements < b.elements; });
    return out;
}

std::uint64_t count_circuits_through(const PointSet& x_set, Word x, int k) {
    check_circuit_args(x_set, k);
    if (!x_set.contains(x)) throw InvalidArgument("element " + format_bits(x, x_set.ambient_dim()) + " is not in X");
    std::uint64_t count = 0;
    search_circuits(x_set, others_of(x_set, x), x, k, [&](const Word*, int) { ++count; });
    return count;
}

CircuitCensus census(const PointSet& x_set, int k) {
    check_circuit_args(x_set, k);
    CircuitCensus c;
    c.k = k;
    c.ambient_dim = x_set.ambient_dim();
    c.elements = x_set.elements();
    c.counts.assign(c.elements.size(), 0);
    parallel_for(c.elements.size(), [&](std::size_t i) {
        std::uint64_t count = 0;
        search_circuits(x_set, others_of(x_set, c.elements[i]), c.elements[i], k,
                        [&](const Word*, int) { ++count; });
        c.counts[i] = count;
    });
    for (std::size_t i = 0; i < c.counts.size(); ++i)
        if (i == 0 || c.counts[i] > c.max_count) {
            c.max_count = c.counts[i];
            c.max_witness = c.elements[i];
        }
    return c;
}

std::uint64_t count_degenerate_tuples(const PointSet& a, int k, Word x) {
    check_tuple_args(a, k);
    if (x >= a.space_size()) throw DimensionMismatch("target vector outside the ambient space");
    const std::vector<Word> elems = a.elements();
    const std::size_t full = (std::size_t{1} << (k - 1)) - 1;
    std::uint64_t count = 0;
    for_each_prefix(elems, k - 1, [&](Word prefix_sum, bool degenerate, const std::vector<Word>& sums) {
        Word last = x ^ prefix_sum;
        if (!a.contains(last)) return;
        if (degenerate) {
            ++count;
            return;
        }
        // A zero-sum proper sub-tuple must use the last position together
        // with a subset of the prefix other than the whole prefix.
        for (std::size_t m = 0; m < full; ++m)
            if (sums[m] == last) {
                ++count;
                return;
            }
    });
    return count;
}

std::vector<std::uint64_t> degenerate_tuple_table(const PointSet& a, int k) {
    check_tuple_args(a, k);
    const std::vector<Word> elems = a.elements();
    const std::size_t full = (std::size_t{1} << (k - 1)) - 1;
    std::vector<std::uint64_t> table(a.space_size(), 0);
    for_each_prefix(elems, k - 1, [&](Word prefix_sum, bool degenerate, const std::vector<Word>& sums) {
        if (degenerate) {
            for (Word w : elems) ++table[prefix_sum ^ w];
            return;
        }
        // Subset sums of a non-degenerate prefix are pairwise distinct, so
        // each admissible last entry is counted once.
        for (std::size_t m = 0; m < full; ++m)
            if (a.contains(sums[m])) ++table[prefix_sum ^ sums[m]];
    });
    return table;
}

} // namespace gf2lab
