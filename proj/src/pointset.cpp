#include "gf2lab/pointset.hpp"

#include "gf2lab/errors.hpp"
#include "gf2lab/random.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace gf2lab {

PointSet::PointSet(int ambient_dim) : dim_(ambient_dim) {
    check_dim(ambient_dim);
    member_.assign(std::size_t{1} << ambient_dim, 0);
}

PointSet::PointSet(int ambient_dim, std::vector<std::uint8_t> membership)
    : dim_(ambient_dim), member_(std::move(membership)) {
    check_dim(ambient_dim);
    if (member_.size() != (std::size_t{1} << ambient_dim))
        throw DimensionMismatch("membership table length is not 2^n");
    for (auto& b : member_) {
        b = b ? 1 : 0;
        size_ += b;
    }
}

PointSet PointSet::from_words(int ambient_dim, std::span<const Word> words) {
    check_dim(ambient_dim);
    std::vector<std::uint8_t> table(std::size_t{1} << ambient_dim, 0);
    for (Word w : words) {
        if (w >= table.size())
            throw DimensionMismatch("vector " + std::to_string(w) + " outside GF(2)^" +
                                    std::to_string(ambient_dim));
        table[w] = 1;
    }
    return PointSet(ambient_dim, std::move(table));
}

PointSet PointSet::full(int ambient_dim) {
    check_dim(ambient_dim);
    return PointSet(ambient_dim, std::vector<std::uint8_t>(std::size_t{1} << ambient_dim, 1));
}

bool PointSet::contains(const GF2Vector& v) const {
    if (v.dim() != dim_) throw DimensionMismatch("vector and point set dimensions differ");
    return contains(v.bits());
}

std::vector<Word> PointSet::elements() const {
    std::vector<Word> out;
    out.reserve(size_);
    for (Word v = 0; v < member_.size(); ++v)
        if (member_[v]) out.push_back(v);
    return out;
}

Rational density(const PointSet& x) { return Rational(BigInt(x.size()), BigInt(x.space_size())); }

PointSet translate(const PointSet& x, Word v) {
    if (v >= x.space_size()) throw DimensionMismatch("translation vector outside the ambient space");
    auto in = x.membership();
    std::vector<std::uint8_t> out(in.size());
    for (Word y = 0; y < out.size(); ++y) out[y] = in[y ^ v];
    return PointSet(x.ambient_dim(), std::move(out));
}

PointSet translate(const PointSet& x, const GF2Vector& v) {
    if (v.dim() != x.ambient_dim()) throw DimensionMismatch("translation vector has the wrong dimension");
    return translate(x, v.bits());
}

SectionResult section(const PointSet& x, const Subspace& h, Word v) {
    if (h.ambient_dim() != x.ambient_dim()) throw DimensionMismatch("subspace and point set dimensions differ");
    if (v >= x.space_size()) throw DimensionMismatch("anchor outside the ambient space");
    SectionCoordinates coords(h);
    std::vector<std::uint8_t> table(h.size());
    for (Word c = 0; c < table.size(); ++c) table[c] = x.contains(coords.backward(c) ^ v);
    return SectionResult{h, v, PointSet(h.dim(), std::move(table))};
}

SectionResult section(const PointSet& x, const Subspace& h, const GF2Vector& v) {
    if (v.dim() != x.ambient_dim()) throw DimensionMismatch("anchor has the wrong dimension");
    return section(x, h, v.bits());
}

PointSet restrict_to(const PointSet& x, const Subspace& h) { return section(x, h, Word{0}).points; }

void require_simple(const PointSet& x, std::string_view who) {
    if (x.contains(Word{0}))
        throw InvalidArgument(std::string(who) + ": the point set contains 0, so M(X) is not simple");
}

PointSet generate_projective(int n) {
    check_dim(n);
    std::vector<std::uint8_t> table(std::size_t{1} << n, 1);
    table[0] = 0;
    return PointSet(n, std::move(table));
}

PointSet generate_affine_layer(int n, Word gamma) {
    check_dim(n);
    if (gamma == 0) throw InvalidArgument("affine layer needs a nonzero character");
    if (gamma >= (Word{1} << n)) throw DimensionMismatch("character outside GF(2)^" + std::to_string(n));
    std::vector<std::uint8_t> table(std::size_t{1} << n);
    for (Word x = 0; x < table.size(); ++x) table[x] = static_cast<std::uint8_t>(dot(gamma, x));
    return PointSet(n, std::move(table));
}

PointSet generate_random_density(int n, const Rational& p, std::uint64_t seed) {
    check_dim(n);
    Bernoulli coin(p);
    Rng rng(seed);
    std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
    for (Word x = 1; x < table.size(); ++x) table[x] = coin(rng) ? 1 : 0;
    return PointSet(n, std::move(table));
}

PointSet generate_random_triangle_free(int n, std::uint64_t seed, std::uint64_t max_size) {
    check_dim(n);
    std::size_t space = std::size_t{1} << n;
    std::vector<Word> order(space > 0 ? space - 1 : 0);
    std::iota(order.begin(), order.end(), Word{1});
    Rng rng(seed);
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[uniform_below(rng, i)]);

    // blocked[y] is set once y = a + b for two members a, b.
    std::vector<std::uint8_t> table(space, 0), blocked(space, 0);
    std::vector<Word> members;
    for (Word x : order) {
        if (members.size() >= max_size) break;
        if (blocked[x]) continue;
        bool completes = false;
        for (Word a : members)
            if (table[a ^ x]) {
                completes = true;
                break;
            }
        if (completes) continue;
        for (Word a : members) blocked[a ^ x] = 1;
        table[x] = 1;
        members.push_back(x);
    }
    return PointSet(n, std::move(table));
}

PointSet generate(std::string_view kind, int n, const GeneratorParams& params, std::uint64_t seed) {
    if (kind == "projective") return generate_projective(n);
    if (kind == "affine-layer") return generate_affine_layer(n, params.gamma);
    if (kind == "random-density") return generate_random_density(n, params.p, seed);
    if (kind == "random-triangle-free") return generate_random_triangle_free(n, seed, params.max_size);
    if (kind == "from-file") return load(params.path);
    throw InvalidArgument("unknown generator kind '" + std::string(kind) + "'");
}

std::string format_gf2set(const PointSet& x) {
    std::string out = "n=" + std::to_string(x.ambient_dim()) + "\n";
    for (Word v : x.elements()) out += format_bits(v, x.ambient_dim()) + "\n";
    return out;
}

PointSet parse_gf2set(std::string_view text, std::vector<std::string>* warnings) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::size_t line_no = 0;
    std::vector<std::uint8_t> table;
    auto fail = [&](const std::string& why) {
        throw ParseError("line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (n < 0) {
            if (line.rfind("n=", 0) != 0) fail("expected header 'n=<dim>'");
            std::string digits = line.substr(2);
            if (digits.empty() || digits.size() > 3 ||
                !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
                fail("malformed header '" + line + "'");
            n = std::stoi(digits);
            check_dim(n);
            table.assign(std::size_t{1} << n, 0);
            continue;
        }
        if (line.size() != static_cast<std::size_t>(n))
            fail("bit string '" + line + "' does not have " + std::to_string(n) + " characters");
        Word v = 0;
        for (char c : line) {
            if (c != '0' && c != '1') fail("bad bit string '" + line + "'");
            v = (v << 1) | static_cast<Word>(c - '0');
        }
        if (table[v]) fail("duplicate vector " + line);
        table[v] = 1;
    }
    if (n < 0) throw ParseError("missing header 'n=<dim>'");
    if (table[0] && warnings) warnings->push_back("point set contains the zero vector; M(X) is not simple");
    return PointSet(n, std::move(table));
}

PointSet load(const std::filesystem::path& path, std::vector<std::string>* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_gf2set(buf.str(), warnings);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void save(const PointSet& x, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << format_gf2set(x);
    if (!out) throw Error("write failed for " + path.string());
}

} // namespace gf2lab
