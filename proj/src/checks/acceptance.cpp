#include "gf2lab/checks/acceptance.hpp"

#include "gf2lab/checks/oracles.hpp"
#include "gf2lab/critical.hpp"
#include "gf2lab/errors.hpp"
#include "gf2lab/harness.hpp"
#include "gf2lab/matroid.hpp"
#include "gf2lab/random.hpp"
#include "gf2lab/regularity.hpp"
#include "gf2lab/report.hpp"
#include "gf2lab/spectral.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

namespace gf2lab::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::string first_failure;

    void fail(const std::string& what) {
        if (pass) first_failure = what;
        pass = false;
    }
};

int scaled(int trials, bool fast) { return fast ? std::max(1, trials / 10) : trials; }

BigInt factorial(int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

std::string instance_tag(const InstanceInfo& info) {
    return info.generator + " n=" + std::to_string(info.n) + " seed=" + std::to_string(info.seed) + " " + info.params;
}

// 1: spectral counts against direct computation.
void spectral_oracle(const Options& o, Outcome& out) {
    const int trials = scaled(50, o.fast);
    int literal = 0;
    int dp = 0;
    std::uint64_t index = 0;
    for (int n : {4, 6, 8})
        for (int k : {3, 4, 5})
            for (int t = 0; t < trials; ++t) {
                InstanceInfo info;
                PointSet a = random_instance(n, derive_seed(o.seed, 100000 + index++), info);
                std::vector<BigInt> fast = count_sum_tuples(a, k);
                std::vector<BigInt> expected;
                // Literal enumeration of A^k when it has at most 2^26 tuples,
                // otherwise the prefix-sum recurrence.
                if (pow(BigInt(a.size()), static_cast<unsigned>(k)) <= (BigInt(1) << 26)) {
                    for (std::uint64_t c : oracle::tuple_counts_enumerated(a, k)) expected.emplace_back(c);
                    ++literal;
                } else {
                    expected = oracle::tuple_counts_dp(a, k);
                    ++dp;
                }
                if (fast != expected) out.fail("mismatch k=" + std::to_string(k) + " " + instance_tag(info));
            }
    out.detail << (literal + dp) << " sets, all x; " << literal << " by literal enumeration, " << dp
               << " by prefix-sum recurrence";
}

// 2: sum-count lower bound.
void sum_bound(const Options& o, Outcome& out) {
    const int trials = scaled(200, o.fast);
    int violations = 0;
    for (int i = 0; i < trials; ++i) {
        const int n = 1 + i % 10;
        const int k = 3 + (i / 10) % 3;
        auto reports = run_sum_bound_suite(n, k, 1, derive_seed(o.seed, 200000 + static_cast<std::uint64_t>(i)));
        for (const auto& r : reports)
            if (!r.pass) {
                ++violations;
                out.fail("violation k=" + std::to_string(k) + " " + instance_tag(r.instance));
            }
    }
    out.detail << trials << " sets, n 1..10, k 3..5, every x; violations " << violations;
}

// 3: degenerate-tuple upper bound.
void degenerate_bound(const Options& o, Outcome& out) {
    const int trials = scaled(100, o.fast);
    int violations = 0;
    int cross_checked = 0;
    for (int i = 0; i < trials; ++i) {
        const int n = 1 + i % 7;
        const int k = 3 + (i / 7) % 2;
        const std::uint64_t seed = derive_seed(o.seed, 300000 + static_cast<std::uint64_t>(i));
        auto reports = run_degenerate_bound_suite(n, k, 1, seed);
        for (const auto& r : reports)
            if (!r.pass) {
                ++violations;
                out.fail("violation k=" + std::to_string(k) + " " + instance_tag(r.instance));
            }
        // Small instances: the counts themselves against the subset-scan oracle.
        InstanceInfo info;
        PointSet a = random_instance(n, derive_seed(seed, 0), info);
        if (pow(BigInt(a.size()), static_cast<unsigned>(k)) <= (BigInt(1) << 16)) {
            auto table = degenerate_tuple_table(a, k);
            for (Word x = 0; x < a.space_size(); ++x)
                if (table[x] != oracle::degenerate_count(a, k, x)) out.fail("S0 count mismatch " + instance_tag(info));
            ++cross_checked;
        }
    }
    out.detail << trials << " sets, n 1..7, k 3..4, every x; violations " << violations << "; " << cross_checked
               << " sets with counts cross-checked by subset scan";
}

// 4: zero-sum triple lower bound.
void triangle_bound(const Options& o, Outcome& out) {
    const int trials = scaled(100, o.fast);
    int violations = 0;
    for (int i = 0; i < trials; ++i) {
        const int n = 1 + i % 10;
        auto reports = run_triangle_bound_suite(n, 1, derive_seed(o.seed, 400000 + static_cast<std::uint64_t>(i)));
        for (const auto& r : reports)
            if (!r.pass) {
                ++violations;
                out.fail("violation " + instance_tag(r.instance));
            }
    }
    out.detail << trials << " triples, n 1..10; violations " << violations;
}

// 5: (k-1)! * circuits through x == N_{k-1}(x) - |S0(X, k-1; x)|.
void tuple_circuit(const Options& o, Outcome& out) {
    const int trials = scaled(20, o.fast);
    const int k = 5;
    const BigInt perms = factorial(k - 1);
    std::uint64_t elements = 0;
    std::uint64_t circuits = 0;
    for (int i = 0; i < trials; ++i) {
        const int n = 4 + i % 4;
        InstanceInfo info;
        PointSet x = random_instance(n, derive_seed(o.seed, 500000 + static_cast<std::uint64_t>(i)), info);
        require_simple(x, "tuple-circuit check");
        auto n_table = count_sum_tuples(x, k - 1);
        auto s0 = degenerate_tuple_table(x, k - 1);
        for (Word e : x.elements()) {
            std::uint64_t c = count_circuits_through(x, e, k);
            if (perms * BigInt(c) != n_table[e] - BigInt(s0[e]))
                out.fail("mismatch at x=" + format_bits(e, n) + " " + instance_tag(info));
            ++elements;
            circuits += c;
        }
    }
    out.detail << trials << " simple sets, n 4..7, k=5; " << elements << " elements checked, " << circuits
               << " circuit incidences";
}

// 6: projective geometry censuses.
constexpr std::uint64_t kPG32FiveCircuitsPerElement = 56;

void pg_census(const Options&, Outcome& out) {
    CircuitCensus pg3 = census(generate_projective(3), 5);
    if (pg3.max_count != 0) out.fail("PG(2,2) has a 5-circuit");
    PointSet pg4_set = generate_projective(4);
    CircuitCensus pg4 = census(pg4_set, 5);
    if (pg4.max_count > 4096) out.fail("PG(3,2) exceeds 2^((k-2)r)");
    if (pg4.max_count != kPG32FiveCircuitsPerElement) out.fail("PG(3,2) differs from the frozen value");
    std::uint64_t via_oracle = oracle::circuits_through(pg4_set, 1, 5);
    if (via_oracle != kPG32FiveCircuitsPerElement) out.fail("subset-scan oracle differs from the frozen value");
    out.detail << "PG(2,2) max " << pg3.max_count << "; PG(3,2) max " << pg4.max_count << " (frozen "
               << kPG32FiveCircuitsPerElement << ", oracle " << via_oracle << ", cap 4096), total 5-circuits "
               << pg4.total_incidences() / 5;
}

// 7: critical numbers.
void critical(const Options& o, Outcome& out) {
    const int trials = scaled(100, o.fast);
    Rng rng(derive_seed(o.seed, 700000));
    int greedy_gaps = 0;
    for (int i = 0; i < trials; ++i) {
        const int n = 1 + i % 5;
        Rational p(BigInt(1 + uniform_below(rng, 15)), BigInt(16));
        std::uint64_t seed = rng();
        PointSet x = generate_random_density(n, p, seed);
        CriticalResult exact = critical_number(x);
        CriticalResult greedy = greedy_cover(x);
        int expected = oracle::critical_number(x);
        std::string tag = "n=" + std::to_string(n) + " p=" + to_string(p) + " seed=" + std::to_string(seed);
        if (exact.value != expected) out.fail("exact differs from enumeration " + tag);
        if (greedy.value < exact.value) out.fail("greedy below exact " + tag);
        if (greedy.value > exact.value) ++greedy_gaps;
        for (const CriticalResult* r : {&exact, &greedy}) {
            if (r->witness.codim() != r->value) out.fail("witness codimension " + tag);
            for (Word e : r->witness.elements())
                if (x.contains(e)) out.fail("witness meets X " + tag);
        }
    }
    for (int n = 1; n <= 5; ++n) {
        PointSet pg = generate_projective(n);
        if (critical_number(pg).value != n) out.fail("PG(" + std::to_string(n - 1) + ",2)");
        if (greedy_cover(pg).value < n) out.fail("greedy on PG(" + std::to_string(n - 1) + ",2)");
        for (Word g = 1; g < (Word{1} << n); ++g) {
            PointSet layer = generate_affine_layer(n, g);
            if (critical_number(layer).value != 1 || greedy_cover(layer).value < 1)
                out.fail("affine layer n=" + std::to_string(n) + " gamma=" + format_bits(g, n));
        }
    }
    out.detail << trials << " random sets n 1..5 match enumeration; greedy strictly above exact on " << greedy_gaps
               << "; PG(n-1,2) = n and all affine layers = 1 for n 1..5";
}

// 8: regularity finder self-certification.
void regularity(const Options& o, Outcome& out) {
    const int trials = scaled(20, o.fast);
    int max_codim = 0;
    int runs = 0;
    for (int i = 0; i < trials; ++i) {
        const int n = 3 + i % 10;
        InstanceInfo info;
        PointSet x = random_instance(n, derive_seed(o.seed, 800000 + static_cast<std::uint64_t>(i)), info);
        for (Rational eps : {Rational(1, 2), Rational(1, 4), Rational(1, 8)}) {
            RefinementTrace tr = find_regular_subspace(x, eps);
            RegularityCert check = is_regular(x, tr.final.subspace, eps);
            int codim = tr.final.subspace.codim();
            if (!check.regular || !tr.final.regular) out.fail("uncertified output eps=" + to_string(eps) + " " + instance_tag(info));
            if (codim > n) out.fail("codimension above n " + instance_tag(info));
            max_codim = std::max(max_codim, codim);
            ++runs;
        }
    }
    out.detail << runs << " runs (" << trials << " sets n 3..12, eps 1/2 1/4 1/8) certified; max codim " << max_codim;
}

// 9: flat-or-triangle procedure.
void weaker(const Options& o, Outcome& out) {
    const int trials = scaled(20, o.fast);
    const Rational eps(1, 4);
    Rng rng(derive_seed(o.seed, 900000));
    int layers = 0;
    int random_free = 0;
    for (int i = 0; i < trials; ++i) {
        const int n = 3 + (i / 2) % 10;
        PointSet x;
        std::string tag;
        if (i % 2 == 0) {
            Word g = 1 + static_cast<Word>(uniform_below(rng, (std::uint64_t{1} << n) - 1));
            x = generate_affine_layer(n, g);
            tag = "affine-layer n=" + std::to_string(n) + " gamma=" + format_bits(g, n);
            ++layers;
        } else {
            std::uint64_t seed = rng();
            x = generate_random_triangle_free(n, seed);
            tag = "random-triangle-free n=" + std::to_string(n) + " seed=" + std::to_string(seed);
            ++random_free;
        }
        if (oracle::has_zero_sum_triple(x)) out.fail("input not triangle-free " + tag);
        WeakerOutcome w = weaker_procedure(x, eps);
        if (w.triangle_branch) out.fail("triangle returned " + tag);
        else if (!w.report.pass) out.fail("flat check failed " + tag);
    }
    PointSet pg = generate_projective(3);
    WeakerOutcome quarter = weaker_procedure(pg, eps);
    WeakerOutcome three_quarters = weaker_procedure(pg, Rational(3, 4));
    bool triangle_ok = three_quarters.triangle_branch && three_quarters.report.pass &&
                       oracle::is_circuit(three_quarters.triangle);
    for (Word e : three_quarters.triangle) triangle_ok = triangle_ok && pg.contains(e);
    if (!triangle_ok) out.fail("PG(2,2) did not give a valid triangle");
    out.detail << trials << " triangle-free inputs (" << layers << " affine layers, " << random_free
               << " random maximal) gave flats; PG(2,2) at eps=3/4 gave triangle";
    if (three_quarters.triangle_branch)
        out.detail << " {" << format_bits(three_quarters.triangle[0], 3) << "," << format_bits(three_quarters.triangle[1], 3)
                   << "," << format_bits(three_quarters.triangle[2], 3) << "}";
    out.detail << "; at eps=1/4 (delta=" << to_string(quarter.delta) << ") only the zero subspace is regular, so it returns the "
               << (quarter.triangle_branch ? "triangle" : "flat of dim " + std::to_string(quarter.flat.dim()));
}

// 10: constants ledger.
void constants(const Options&, Outcome& out) {
    ConstantsLedger c = theorem_constants(Rational(1, 2), 5);
    if (c.epsilon != Rational(1, 8)) out.fail("epsilon " + to_string(c.epsilon));
    if (c.r0_offset != 12) out.fail("r0 offset " + std::to_string(c.r0_offset));
    if (c.log2_beta_s0_coeff != -3 || c.factorial != 24 || c.beta_bracket != Rational(1, 4096))
        out.fail("log2 beta terms");
    if (c.log2_beta_text() != "-3*s0 - log2(24) - 12") out.fail("log2 beta text " + c.log2_beta_text());
    int positive = 0;
    for (std::int64_t s = 1; s <= 40; ++s) {
        if (c.beta_at(s) > 0 && c.r0_slack_at(s) > 0) ++positive;
        else out.fail("beta(" + std::to_string(s) + ") not positive");
    }
    out.detail << "epsilon=" << to_string(c.epsilon) << ", r0=s0+" << c.r0_offset << ", log2 beta = " << c.log2_beta_text()
               << "; beta(s)>0 for " << positive << "/40 values of s";
}

// 11: byte-identical reruns.
std::string library_reports(std::uint64_t seed) {
    std::string all;
    all += emit_reports(run_sum_bound_suite(7, 4, 5, seed), false);
    all += emit_reports(run_degenerate_bound_suite(5, 3, 5, seed), false);
    all += emit_reports(run_triangle_bound_suite(8, 5, seed), false);
    PointSet x = generate_random_density(7, Rational(3, 4), seed);
    std::vector<VerifierReport> more{dichotomy_experiment(x, 5, Rational(1, 4)).report,
                                     weaker_procedure(generate_random_triangle_free(9, seed), Rational(1, 4)).report};
    all += emit_reports(more, false);
    all += to_json(find_regular_subspace(x, Rational(1, 8))).dump(2);
    all += to_json(critical_number(x)).dump(2);
    return all;
}

void reproducibility(const Options& o, Outcome& out) {
    const std::uint64_t seed = derive_seed(o.seed, 1100000);
    if (library_reports(seed) != library_reports(seed)) out.fail("library reports differ between runs");
    int commands = 0;
    if (o.runner) {
        const std::string s = std::to_string(seed % 1000000);
        const std::vector<std::vector<std::string>> runs{
            {"--no-timestamps", "verify", "lemma22", "--n", "8", "--k", "5", "--trials", "10", "--seed", s},
            {"--no-timestamps", "verify", "lemma23", "--n", "6", "--k", "4", "--trials", "10", "--seed", s},
            {"--no-timestamps", "verify", "lemma41", "--n", "9", "--trials", "10", "--seed", s},
            {"--no-timestamps", "constants", "--alpha", "1/2", "-k", "5"},
        };
        for (const auto& args : runs) {
            if (o.runner(args) != o.runner(args)) {
                std::string joined;
                for (const auto& a : args) joined += a + " ";
                out.fail("command output differs: " + joined);
            }
            ++commands;
        }
    }
    out.detail << "library suites, dichotomy, weaker, refinement and critical reports identical across two runs";
    if (commands > 0) out.detail << "; " << commands << " tool commands identical across two runs";
}

struct Criterion {
    int id;
    const char* name;
    double budget;
    void (*run)(const Options&, Outcome&);
};

constexpr Criterion kCriteria[] = {
    {1, "spectral tuple counts match direct computation", 60, spectral_oracle},
    {2, "sum-count lower bound suite", 180, sum_bound},
    {3, "degenerate-tuple upper bound suite", 180, degenerate_bound},
    {4, "zero-sum triple lower bound suite", 120, triangle_bound},
    {5, "tuple-circuit correspondence", 300, tuple_circuit},
    {6, "projective geometry circuit censuses", 120, pg_census},
    {7, "critical number solver", 300, critical},
    {8, "regular subspace finder", 300, regularity},
    {9, "flat-or-triangle procedure", 300, weaker},
    {10, "constants ledger", 0, constants},
    {11, "reproducible reports", 0, reproducibility},
};

} // namespace

std::vector<CriterionResult> run_all(const Options& options) {
    std::vector<CriterionResult> results;
    for (const Criterion& spec : kCriteria) {
        CriterionResult r;
        r.id = spec.id;
        r.name = spec.name;
        r.budget_seconds = spec.budget;
        Outcome out;
        auto start = Clock::now();
        try {
            spec.run(options, out);
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        r.pass = out.pass;
        if (r.budget_seconds > 0 && r.seconds >= r.budget_seconds) {
            r.pass = false;
            out.fail("time budget exceeded");
        }
        r.detail = out.detail.str();
        if (!out.pass) r.detail = "FIRST FAILURE: " + out.first_failure + (r.detail.empty() ? "" : "; " + r.detail);
        if (options.on_result) options.on_result(r);
        results.push_back(std::move(r));
    }
    return results;
}

std::string format_line(const CriterionResult& r) {
    char timing[64];
    if (r.budget_seconds > 0) std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", r.seconds, r.budget_seconds);
    else std::snprintf(timing, sizeof timing, "%.2f s", r.seconds);
    return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + " (" + timing +
           "): " + r.detail;
}

} // namespace gf2lab::acceptance
