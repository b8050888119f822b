#include "gf2lab/checks/oracles.hpp"

#include "gf2lab/errors.hpp"

#include <algorithm>

namespace gf2lab::oracle {

std::int64_t character_sum(const PointSet& x, Word gamma) {
    std::int64_t inside = 0, outside = 0;
    for (Word v : x.elements()) {
        if (parity(v & gamma) == 0)
            ++inside;
        else
            ++outside;
    }
    return inside - outside;
}

std::vector<std::uint64_t> tuple_counts_enumerated(const PointSet& a, int k) {
    const std::vector<Word> elems = a.elements();
    std::vector<std::uint64_t> hist(a.space_size(), 0);
    if (elems.empty()) return hist;
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    for (;;) {
        Word s = 0;
        for (std::size_t i : idx) s ^= elems[i];
        ++hist[s];
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == elems.size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
    return hist;
}

std::vector<BigInt> tuple_counts_dp(const PointSet& a, int k) {
    const std::vector<Word> elems = a.elements();
    std::vector<BigInt> cur(a.space_size(), 0);
    cur[0] = 1;
    for (int j = 0; j < k; ++j) {
        std::vector<BigInt> next(a.space_size(), 0);
        for (Word y = 0; y < next.size(); ++y)
            for (Word e : elems) next[y] += cur[y ^ e];
        cur = std::move(next);
    }
    return cur;
}

std::uint64_t degenerate_count(const PointSet& a, int k, Word x) {
    const std::vector<Word> elems = a.elements();
    if (elems.empty() || k < 1) return 0;
    std::uint64_t count = 0;
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    std::vector<Word> tuple(static_cast<std::size_t>(k));
    const std::uint32_t full = (1U << k) - 1;
    for (;;) {
        Word s = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            tuple[i] = elems[idx[i]];
            s ^= tuple[i];
        }
        if (s == x) {
            bool degenerate = false;
            for (std::uint32_t mask = 1; mask < full && !degenerate; ++mask) {
                Word t = 0;
                for (int i = 0; i < k; ++i)
                    if ((mask >> i) & 1U) t ^= tuple[static_cast<std::size_t>(i)];
                degenerate = t == 0;
            }
            if (degenerate) ++count;
        }
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == elems.size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
    return count;
}

bool is_circuit(std::span<const Word> elements) {
    const std::size_t k = elements.size();
    if (k == 0 || k > 20) return false;
    Word total = 0;
    for (Word w : elements) total ^= w;
    if (total != 0) return false;
    const std::uint32_t full = (1U << k) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        Word t = 0;
        for (std::size_t i = 0; i < k; ++i)
            if ((mask >> i) & 1U) t ^= elements[i];
        if (t == 0) return false;
    }
    return true;
}

std::uint64_t circuits_through(const PointSet& x_set, Word x, int k) {
    std::vector<Word> others = x_set.elements();
    others.erase(std::remove(others.begin(), others.end(), x), others.end());
    const std::size_t r = static_cast<std::size_t>(k - 1);
    if (others.size() < r) return 0;
    std::vector<std::size_t> comb(r);
    for (std::size_t i = 0; i < r; ++i) comb[i] = i;
    std::uint64_t count = 0;
    std::vector<Word> candidate(r + 1);
    for (;;) {
        for (std::size_t i = 0; i < r; ++i) candidate[i] = others[comb[i]];
        candidate[r] = x;
        if (is_circuit(candidate)) ++count;
        std::size_t i = r;
        while (i > 0 && comb[i - 1] == others.size() - r + (i - 1)) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t j = i; j < r; ++j) comb[j] = comb[j - 1] + 1;
    }
    return count;
}

BigInt zero_triples(const PointSet& a1, const PointSet& a2, const PointSet& a3) {
    std::uint64_t count = 0;
    for (Word u : a1.elements())
        for (Word v : a2.elements())
            if (a3.contains(u ^ v)) ++count;
    return BigInt(count);
}

int critical_number(const PointSet& x) {
    const int n = x.ambient_dim();
    if (x.contains(Word{0})) throw InvalidArgument("critical number of a set containing 0");
    for (int d = n; d >= 0; --d) {
        bool found = false;
        for_each_subspace(n, d, [&](const Subspace& s) {
            if (found) return;
            bool disjoint = true;
            for (Word e : s.elements())
                if (x.contains(e)) {
                    disjoint = false;
                    break;
                }
            found = disjoint;
        });
        if (found) return n - d;
    }
    return n;
}

bool has_zero_sum_triple(const PointSet& x) {
    const std::vector<Word> e = x.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            for (std::size_t l = j + 1; l < e.size(); ++l)
                if ((e[i] ^ e[j] ^ e[l]) == 0) return true;
    return false;
}

} // namespace gf2lab::oracle
