#include "gf2lab/harness.hpp"

#include "gf2lab/errors.hpp"
#include "gf2lab/random.hpp"

#include <chrono>
#include <sstream>

namespace gf2lab {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

BigInt factorial(int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

BigInt big(std::uint64_t v) { return BigInt(v); }

std::string bits(Word w, int n) { return format_bits(w, n); }

} // namespace

// ---------------------------------------------------------------------------
// Constants ledger

Rational ConstantsLedger::r0_slack_at(std::int64_t s) const {
    (void)s; // r0(s) - s is the fixed offset, so the slack does not depend on s
    return selection_margin - pow2(k - 1 - r0_offset);
}

Rational ConstantsLedger::beta_at(std::int64_t s) const {
    return pow2((2 - k) * s) / Rational(factorial) * r0_slack_at(s);
}

std::string ConstantsLedger::s0_text() const { return "W(" + tower_height.str() + ")"; }

std::string ConstantsLedger::log2_beta_text() const {
    std::string out = std::to_string(log2_beta_s0_coeff) + "*s0 - log2(" + factorial.str() + ")";
    std::int64_t e = 0;
    if (exact_log2(beta_bracket, e)) {
        if (e < 0) out += " - " + std::to_string(-e);
        if (e > 0) out += " + " + std::to_string(e);
    } else {
        out += " + log2(" + to_string(beta_bracket) + ")";
    }
    return out;
}

ConstantsLedger theorem_constants(const Rational& alpha, int k) {
    if (alpha <= 0 || alpha > 1) throw InvalidArgument("alpha must lie in (0, 1]");
    if (k < 5 || k % 2 == 0) throw InvalidArgument("k must be an odd integer >= 5");
    ConstantsLedger L;
    L.alpha = alpha;
    L.k = k;
    for (int j = 1; j <= 64; ++j) {
        Rational eps = pow2(-j);
        Rational a0 = alpha - eps;
        if (a0 <= 0) continue;
        Rational margin = pow(a0, static_cast<unsigned>(k - 1)) - pow(eps, static_cast<unsigned>(k - 3));
        if (margin > 0) {
            L.epsilon_exponent = j;
            L.epsilon = eps;
            L.alpha0 = a0;
            L.selection_margin = margin;
            break;
        }
    }
    if (L.epsilon_exponent == 0)
        throw InvalidArgument("no epsilon = 2^-j with j <= 64 satisfies the selection constraint");
    L.tower_height = BigInt(1) << (3 * L.epsilon_exponent); // ceil(eps^-3) = 2^(3j)
    // Least offset t with 2^(k-1-t) < margin.
    std::int64_t t = k - 1;
    while (pow2(k - 1 - t) >= L.selection_margin) ++t;
    L.r0_offset = t;
    L.c_offset = std::max<std::int64_t>(t, 0);
    L.beta_bracket = L.selection_margin - pow2(k - 1 - t);
    L.log2_beta_s0_coeff = 2 - k;
    L.factorial = factorial(k - 1);
    return L;
}

// ---------------------------------------------------------------------------
// Reports

bool Inequality::holds() const {
    if (relation == ">=") return lhs >= rhs;
    if (relation == "<=") return lhs <= rhs;
    if (relation == "==") return lhs == rhs;
    throw std::logic_error("unknown relation " + relation);
}

void VerifierReport::finalize() {
    pass = true;
    for (const auto& c : checks) pass = pass && c.holds();
}

// ---------------------------------------------------------------------------
// Verifiers

VerifierReport verify_sum_bound(const PointSet& a, int k, InstanceInfo info) {
    if (k < 3) throw InvalidArgument("the sum-count bound needs k >= 3");
    auto start = Clock::now();
    const int n = a.ambient_dim();
    info.n = n;
    info.k = k;
    UniformityReport u = uniformity(a);
    std::vector<BigInt> counts = count_sum_tuples(a, k);
    const BigInt rhs = pow(big(a.size()), static_cast<unsigned>(k)) -
                       pow(BigInt(u.max_abs_correlation), static_cast<unsigned>(k - 2)) * (BigInt(1) << (2 * n));
    std::size_t worst = 0;
    for (std::size_t x = 1; x < counts.size(); ++x)
        if (counts[x] < counts[worst]) worst = x;
    bool all_hold = true;
    for (const auto& c : counts) all_hold = all_hold && ((c << n) >= rhs);

    VerifierReport r;
    r.statement = "lemma22";
    r.instance = info;
    r.checks.push_back({"2^n*N_k(x) >= |A|^k - U^(k-2)*2^(2n) at worst x", counts[worst] << n, ">=", rhs});
    r.details = {{"size", std::to_string(a.size())},
                 {"U", std::to_string(u.max_abs_correlation)},
                 {"epsilon_star", to_string(u.epsilon_star)},
                 {"worst_x", bits(static_cast<Word>(worst), n)},
                 {"x_checked", std::to_string(counts.size())},
                 {"all_x_hold", all_hold ? "true" : "false"}};
    r.finalize();
    r.pass = r.pass && all_hold;
    r.runtime_ms = elapsed_ms(start);
    return r;
}

VerifierReport verify_degenerate_bound(const PointSet& a, int k, Word x, InstanceInfo info) {
    if (k < 2) throw InvalidArgument("the degenerate-tuple bound needs k >= 2");
    auto start = Clock::now();
    info.n = a.ambient_dim();
    info.k = k;
    std::uint64_t count = count_degenerate_tuples(a, k, x);
    VerifierReport r;
    r.statement = "lemma23";
    r.instance = info;
    r.checks.push_back({"|S0(A,k;x)| <= 2^k*|A|^(k-2)", big(count), "<=",
                        (BigInt(1) << k) * pow(big(a.size()), static_cast<unsigned>(k - 2))});
    r.details = {{"size", std::to_string(a.size())}, {"x", bits(x, a.ambient_dim())}};
    r.finalize();
    r.runtime_ms = elapsed_ms(start);
    return r;
}

VerifierReport verify_degenerate_bound_all(const PointSet& a, int k, InstanceInfo info) {
    if (k < 2) throw InvalidArgument("the degenerate-tuple bound needs k >= 2");
    auto start = Clock::now();
    info.n = a.ambient_dim();
    info.k = k;
    std::vector<std::uint64_t> table = degenerate_tuple_table(a, k);
    std::size_t worst = 0;
    for (std::size_t x = 1; x < table.size(); ++x)
        if (table[x] > table[worst]) worst = x;
    VerifierReport r;
    r.statement = "lemma23";
    r.instance = info;
    r.checks.push_back({"max_x |S0(A,k;x)| <= 2^k*|A|^(k-2)", big(table[worst]), "<=",
                        (BigInt(1) << k) * pow(big(a.size()), static_cast<unsigned>(k - 2))});
    r.details = {{"size", std::to_string(a.size())},
                 {"worst_x", bits(static_cast<Word>(worst), a.ambient_dim())},
                 {"x_checked", std::to_string(table.size())}};
    r.finalize();
    r.runtime_ms = elapsed_ms(start);
    return r;
}

VerifierReport verify_triangle_bound(const PointSet& a1, const PointSet& a2, const PointSet& a3, InstanceInfo info) {
    auto start = Clock::now();
    const int n = a1.ambient_dim();
    info.n = n;
    info.k = 3;
    BigInt t = count_zero_triples(a1, a2, a3);
    UniformityReport u1 = uniformity(a1);
    BigInt rhs = big(a1.size()) * big(a2.size()) * big(a3.size()) -
                 BigInt(u1.max_abs_correlation) * (BigInt(1) << (2 * n));
    VerifierReport r;
    r.statement = "lemma41";
    r.instance = info;
    r.checks.push_back({"2^n*T >= |A1||A2||A3| - U1*2^(2n)", t << n, ">=", rhs});
    r.details = {{"T", t.str()},
                 {"sizes", std::to_string(a1.size()) + "," + std::to_string(a2.size()) + "," + std::to_string(a3.size())},
                 {"U1", std::to_string(u1.max_abs_correlation)}};
    r.finalize();
    r.runtime_ms = elapsed_ms(start);
    return r;
}

// ---------------------------------------------------------------------------
// Anchor selection

AnchorResult pick_anchor(const PointSet& x, const Subspace& h, const Rational& eps, const Rational& size_fraction) {
    if (size_fraction <= 0)
        throw InvalidArgument("anchor size threshold must be positive (density must exceed epsilon)");
    RegularityCert cert = is_regular(x, h, eps);
    if (!cert.regular) throw InvalidArgument("pick_anchor needs an eps-regular subspace");

    const std::vector<Word> reps = coset_reps(h);
    std::vector<PointSet> sections;
    sections.reserve(reps.size());
    BigInt anchor_sum = 0;
    for (Word v : reps) {
        sections.push_back(section(x, h, v).points);
        anchor_sum += big(sections.back().size()) << h.dim(); // |H| anchors share this section size
    }
    const BigInt expected = big(x.size()) << h.dim();
    if (anchor_sum != expected)
        throw std::logic_error("anchor sum " + anchor_sum.str() + " differs from |X||H| = " + expected.str());

    const Rational needed = size_fraction * pow2(h.dim());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (Rational(big(sections[i].size())) < needed) continue;
        UniformityReport u = uniformity(sections[i]);
        if (!u.is_uniform(eps)) continue;
        return AnchorResult{reps[i], std::move(sections[i]), u, size_fraction, anchor_sum};
    }
    std::ostringstream dump;
    dump << format_gf2set(x) << "# subspace\n" << format_subspace(h) << "# eps=" << to_string(eps)
         << " size_fraction=" << to_string(size_fraction) << "\n";
    for (std::size_t i = 0; i < reps.size(); ++i)
        dump << "# coset " << bits(reps[i], x.ambient_dim()) << " size=" << sections[i].size()
             << " U=" << uniformity(sections[i]).max_abs_correlation << "\n";
    throw CounterexampleError("no anchor satisfies the size and uniformity requirements", dump.str());
}

AnchorResult pick_anchor(const PointSet& x, const Subspace& h, const Rational& eps) {
    return pick_anchor(x, h, eps, density(x) - eps);
}

// ---------------------------------------------------------------------------
// Dichotomy

DichotomyOutcome dichotomy_experiment(const PointSet& x, int k, const Rational& eps, InstanceInfo info) {
    require_simple(x, "dichotomy_experiment");
    if (x.empty()) throw InvalidArgument("dichotomy_experiment needs a nonempty set (density 0)");
    if (k < 5 || k % 2 == 0) throw InvalidArgument("k must be an odd integer >= 5");
    if (eps <= 0) throw InvalidArgument("epsilon must be positive");
    auto start = Clock::now();
    const int n = x.ambient_dim();
    info.n = n;
    info.k = k;

    DichotomyOutcome out;
    out.trace = find_regular_subspace(x, eps);
    const Subspace& h = out.trace.final.subspace;
    out.codim = h.codim();
    PointSet in_h = restrict_to(x, h);

    VerifierReport& r = out.report;
    r.statement = "dichotomy";
    r.instance = info;
    r.details.push_back({"regular_codim", std::to_string(out.codim)});
    r.details.push_back({"refinement_steps", std::to_string(out.trace.steps.size())});

    if (in_h.empty()) {
        out.critical_branch = true;
        r.details.push_back({"branch", "critical"});
        r.details.push_back({"critical_number_at_most", std::to_string(out.codim)});
        r.checks.push_back({"|H n X| == 0", big(0), "==", big(in_h.size())});
        r.finalize();
        r.runtime_ms = elapsed_ms(start);
        return out;
    }

    SectionCoordinates coords(h);
    out.element = coords.backward(in_h.elements().front()); // smallest, since coordinates are monotone
    AnchorResult anchor = pick_anchor(x, h, eps);
    out.anchor = anchor.anchor;
    out.section_size = anchor.section.size();
    const Word target = coords.forward(out.element);

    std::vector<BigInt> n_counts = count_sum_tuples(anchor.section, k - 1);
    out.sum_tuples = n_counts[target];
    out.degenerate_tuples = big(count_degenerate_tuples(anchor.section, k - 1, target));
    const BigInt nondegenerate = out.sum_tuples - out.degenerate_tuples;
    const BigInt perms = factorial(k - 1);
    if (nondegenerate % perms != 0)
        throw std::logic_error("non-degenerate tuple count is not divisible by (k-1)!");
    out.lifted_circuits = nondegenerate / perms;

    // Direct search: circuits through x whose other elements lie in the
    // anchor coset and whose shifted tuple w_i = y_i + a has no zero-sum
    // proper sub-tuple.
    std::vector<std::uint8_t> restricted(x.space_size(), 0);
    restricted[out.element] = 1;
    for (Word c = 0; c < anchor.section.space_size(); ++c)
        if (anchor.section.contains(c)) restricted[coords.backward(c) ^ out.anchor] = 1;
    PointSet y(n, std::move(restricted));
    for (const Circuit& c : circuits_through(y, out.element, k)) {
        std::vector<Word> shifted;
        for (Word e : c.elements)
            if (e != out.element) shifted.push_back(e ^ out.anchor);
        bool independent = true;
        Subspace span = rref_span_words(shifted, n);
        independent = span.dim() == static_cast<int>(shifted.size());
        if (independent) ++out.restricted_dfs_circuits;
    }
    try {
        out.all_circuits = count_circuits_through(x, out.element, k);
    } catch (const ScaleError&) {
    }

    r.details.push_back({"branch", "circuits"});
    r.details.push_back({"element", bits(out.element, n)});
    r.details.push_back({"anchor", bits(out.anchor, n)});
    r.details.push_back({"section_size", std::to_string(out.section_size)});
    r.details.push_back({"N_{k-1}(x)", out.sum_tuples.str()});
    r.details.push_back({"S0_{k-1}(x)", out.degenerate_tuples.str()});
    r.details.push_back({"lifted_circuits", out.lifted_circuits.str()});
    r.details.push_back({"restricted_dfs_circuits", std::to_string(out.restricted_dfs_circuits)});
    const Rational scale = pow2(static_cast<std::int64_t>(k - 2) * n);
    r.details.push_back({"lifted_ratio_to_2^((k-2)n)", to_string(Rational(out.lifted_circuits) / scale)});
    if (out.all_circuits) {
        r.details.push_back({"all_circuits_through_x", std::to_string(*out.all_circuits)});
        r.details.push_back({"all_ratio_to_2^((k-2)n)", to_string(Rational(big(*out.all_circuits)) / scale)});
    }
    try {
        ConstantsLedger ledger = theorem_constants(density(x), k);
        r.details.push_back({"symbolic_log2_beta", ledger.log2_beta_text()});
        r.details.push_back({"symbolic_s0", ledger.s0_text()});
    } catch (const InvalidArgument&) {
        r.details.push_back({"symbolic_log2_beta", "infeasible"});
    }
    r.checks.push_back({"N - S0 == (k-1)! * restricted circuit count", nondegenerate, "==",
                        perms * big(out.restricted_dfs_circuits)});
    if (out.all_circuits)
        r.checks.push_back({"lifted circuits <= all circuits through x", out.lifted_circuits, "<=",
                            big(*out.all_circuits)});
    r.finalize();
    r.runtime_ms = elapsed_ms(start);
    return out;
}

// ---------------------------------------------------------------------------
// Flat or triangle

Rational select_delta(const Rational& eps) {
    if (eps <= 0) throw InvalidArgument("epsilon must be positive");
    for (int j = 1; j <= 64; ++j) {
        Rational d = pow2(-j);
        if (eps * (eps - d) * (eps - d) > d) return d;
    }
    throw InvalidArgument("no delta = 2^-j with j <= 64 satisfies eps (eps - delta)^2 > delta");
}

bool has_triangle(const PointSet& x) {
    const std::vector<Word> e = x.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            Word c = e[i] ^ e[j];
            if (c > e[j] && x.contains(c)) return true;
        }
    return false;
}

WeakerOutcome weaker_procedure(const PointSet& x, const Rational& eps, InstanceInfo info) {
    require_simple(x, "weaker_procedure");
    auto start = Clock::now();
    const int n = x.ambient_dim();
    info.n = n;
    info.k = 3;
    WeakerOutcome out;
    out.delta = select_delta(eps);
    VerifierReport& r = out.report;
    r.statement = "weaker";
    r.instance = info;
    r.details.push_back({"epsilon", to_string(eps)});
    r.details.push_back({"delta", to_string(out.delta)});

    auto finish_flat = [&](const Subspace& f, const char* reason) {
        out.flat = f;
        out.flat_hits = restrict_to(x, f).size();
        r.details.push_back({"branch", "flat"});
        r.details.push_back({"reason", reason});
        r.details.push_back({"flat_dim", std::to_string(f.dim())});
        r.details.push_back({"flat_hits", std::to_string(out.flat_hits)});
        r.details.push_back({"achieved_codim", std::to_string(out.achieved_codim)});
        // |F n X| <= eps 2^dim(F), scaled by the denominator of eps.
        r.checks.push_back({"|F n X|*q <= p*2^dim(F)", big(out.flat_hits) * denominator(eps), "<=",
                            numerator(eps) << f.dim()});
        r.checks.push_back({"dim F >= n - achieved codim", BigInt(f.dim()), ">=", BigInt(n - out.achieved_codim)});
        r.finalize();
        r.runtime_ms = elapsed_ms(start);
    };

    if (Rational(big(x.size())) <= eps * pow2(n)) {
        finish_flat(Subspace::full(n), "sparse");
        return out;
    }
    RefinementTrace trace = find_regular_subspace(x, out.delta);
    const Subspace h = trace.final.subspace;
    out.achieved_codim = h.codim();
    AnchorResult anchor = pick_anchor(x, h, out.delta, eps - out.delta);
    PointSet in_h = restrict_to(x, h);
    r.details.push_back({"anchor", bits(anchor.anchor, n)});
    if (Rational(big(in_h.size())) <= eps * pow2(h.dim())) {
        finish_flat(h, "regular-subspace");
        return out;
    }

    BigInt t = count_zero_triples(anchor.section, anchor.section, in_h);
    if (t <= 0) {
        std::ostringstream dump;
        dump << format_gf2set(x) << "# subspace\n" << format_subspace(h) << "# anchor "
             << bits(anchor.anchor, n) << "\n";
        throw CounterexampleError("dense regular subspace with no zero-sum triple T(A, A, X n H)", dump.str());
    }
    SectionCoordinates coords(h);
    const PointSet& a = anchor.section;
    for (Word z = 0; z < in_h.space_size() && !out.triangle_branch; ++z) {
        if (!in_h.contains(z)) continue;
        for (Word u = 0; u < a.space_size(); ++u)
            if (a.contains(u) && a.contains(u ^ z)) {
                out.triangle = {coords.backward(u) ^ anchor.anchor, coords.backward(u ^ z) ^ anchor.anchor,
                                coords.backward(z)};
                out.triangle_branch = true;
                break;
            }
    }
    if (!out.triangle_branch) throw std::logic_error("positive triple count but no triple found by scan");
    for (Word e : out.triangle)
        if (!x.contains(e)) throw std::logic_error("lifted triangle element outside X");
    Word sum = out.triangle[0] ^ out.triangle[1] ^ out.triangle[2];
    bool circuit = is_circuit(out.triangle);
    r.details.push_back({"branch", "triangle"});
    r.details.push_back({"triangle", bits(out.triangle[0], n) + " " + bits(out.triangle[1], n) + " " +
                                         bits(out.triangle[2], n)});
    r.details.push_back({"T", t.str()});
    r.checks.push_back({"triangle sum == 0", BigInt(sum), "==", BigInt(0)});
    r.checks.push_back({"triangle is a circuit", BigInt(circuit ? 1 : 0), "==", BigInt(1)});
    r.finalize();
    r.runtime_ms = elapsed_ms(start);
    return out;
}

// ---------------------------------------------------------------------------
// Suites

PointSet random_instance(int n, std::uint64_t seed, InstanceInfo& info) {
    Rng rng(seed);
    Rational p(BigInt(1 + uniform_below(rng, 15)), BigInt(16));
    std::uint64_t set_seed = rng();
    info.generator = "random-density";
    info.seed = set_seed;
    info.n = n;
    info.params = "p=" + to_string(p);
    return generate_random_density(n, p, set_seed);
}

std::vector<VerifierReport> run_sum_bound_suite(int n, int k, int trials, std::uint64_t seed) {
    std::vector<VerifierReport> out;
    for (int t = 0; t < trials; ++t) {
        InstanceInfo info;
        PointSet a = random_instance(n, derive_seed(seed, static_cast<std::uint64_t>(t)), info);
        out.push_back(verify_sum_bound(a, k, info));
    }
    return out;
}

std::vector<VerifierReport> run_degenerate_bound_suite(int n, int k, int trials, std::uint64_t seed) {
    std::vector<VerifierReport> out;
    for (int t = 0; t < trials; ++t) {
        InstanceInfo info;
        PointSet a = random_instance(n, derive_seed(seed, static_cast<std::uint64_t>(t)), info);
        out.push_back(verify_degenerate_bound_all(a, k, info));
    }
    return out;
}

std::vector<VerifierReport> run_triangle_bound_suite(int n, int trials, std::uint64_t seed) {
    std::vector<VerifierReport> out;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t base = derive_seed(seed, static_cast<std::uint64_t>(t));
        InstanceInfo i1, i2, i3;
        PointSet a1 = random_instance(n, derive_seed(base, 1), i1);
        PointSet a2 = random_instance(n, derive_seed(base, 2), i2);
        PointSet a3 = random_instance(n, derive_seed(base, 3), i3);
        InstanceInfo info{"random-density x3", base, n, 3, i1.params + ";" + i2.params + ";" + i3.params};
        out.push_back(verify_triangle_bound(a1, a2, a3, info));
    }
    return out;
}

} // namespace gf2lab
