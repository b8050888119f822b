#pragma once

// Executable checks of the sum-count, degenerate-tuple and triangle-count
// bounds, the anchor selection, the circuit dichotomy and the flat-or-triangle
// procedure, plus the bookkeeping of the constants behind the dichotomy.
//
// Every inequality is recorded with both sides as exact integers.

#include "gf2lab/matroid.hpp"
#include "gf2lab/pointset.hpp"
#include "gf2lab/rational.hpp"
#include "gf2lab/regularity.hpp"
#include "gf2lab/spectral.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gf2lab {

// ---------------------------------------------------------------------------
// Constants ledger

/// Constants of the dichotomy for given (alpha, k). The regularity
/// codimension s0 = W(ceil(eps^-3)) is a tower of 2's and is never
/// evaluated; everything that depends on it is kept affine in s0.
struct ConstantsLedger {
    Rational alpha;
    int k = 0;
    int epsilon_exponent = 0; // epsilon = 2^-epsilon_exponent
    Rational epsilon;
    Rational alpha0;          // alpha - epsilon
    BigInt tower_height;      // s0 = W(tower_height)
    std::int64_t r0_offset = 0; // r0 = s0 + r0_offset
    std::int64_t c_offset = 0;  // c = max(r0, s0) = s0 + c_offset
    Rational selection_margin;  // alpha0^(k-1) - eps^(k-3), positive
    Rational beta_bracket;      // selection_margin - 2^(k-1-r0_offset), positive
    int log2_beta_s0_coeff = 0; // 2 - k
    BigInt factorial;           // (k-1)!

    /// log2(beta) = log2_beta_s0_coeff * s0 + log2(log2_beta_constant()).
    Rational log2_beta_constant() const { return beta_bracket / Rational(factorial); }

    /// beta with a concrete integer s substituted for s0.
    Rational beta_at(std::int64_t s) const;
    /// alpha0^(k-1) - eps^(k-3) - 2^(k-1+s-r0(s)) with r0(s) = s + r0_offset.
    Rational r0_slack_at(std::int64_t s) const;

    /// Human-readable forms, e.g. "-3*s0 - log2(24) - 12".
    std::string log2_beta_text() const;
    std::string s0_text() const;
};

/// Picks epsilon as the largest 2^-j (1 <= j <= 64) with alpha - eps > 0 and
/// (alpha - eps)^(k-1) > eps^(k-3), then the least r0 offset that keeps beta
/// positive. Requires 0 < alpha <= 1 and odd k >= 5.
ConstantsLedger theorem_constants(const Rational& alpha, int k);

// ---------------------------------------------------------------------------
// Reports

struct Inequality {
    std::string label;
    BigInt lhs;
    std::string relation; // ">=", "<=" or "=="
    BigInt rhs;

    bool holds() const;
};

struct InstanceInfo {
    std::string generator;
    std::uint64_t seed = 0;
    int n = 0;
    int k = 0;
    std::string params;
};

struct VerifierReport {
    std::string statement;
    InstanceInfo instance;
    std::vector<Inequality> checks;
    std::vector<std::pair<std::string, std::string>> details;
    bool pass = false;
    double runtime_ms = 0;

    /// Sets pass from the recorded checks.
    void finalize();
};

// ---------------------------------------------------------------------------
// Verifiers

/// For every x: 2^n N_k(x) >= |A|^k - U^(k-2) 2^(2n), where U is the
/// measured uniformity of A. Records the x with the smallest slack.
VerifierReport verify_sum_bound(const PointSet& a, int k, InstanceInfo info = {});

/// |S_0(A, k; x)| <= 2^k |A|^(k-2), by enumeration. Requires k >= 2.
VerifierReport verify_degenerate_bound(const PointSet& a, int k, Word x, InstanceInfo info = {});
/// The same bound for every x at once; records the tightest x.
VerifierReport verify_degenerate_bound_all(const PointSet& a, int k, InstanceInfo info = {});

/// 2^n T(A1, A2, A3) >= |A1||A2||A3| - U1 2^(2n).
VerifierReport verify_triangle_bound(const PointSet& a1, const PointSet& a2, const PointSet& a3,
                                     InstanceInfo info = {});

// ---------------------------------------------------------------------------
// Anchor selection

struct AnchorResult {
    Word anchor = 0;
    PointSet section;        // H_a(X) in H-coordinates
    UniformityReport uniformity;
    Rational size_fraction;  // required |H_a(X)| / |H|
    BigInt anchor_sum;       // sum over v in V of |H_v(X)|
};

/// First anchor (a = 0, then the coset minima in increasing order) whose
/// section is eps-uniform in H and has at least size_fraction * |H| points.
/// H must be eps-regular for X. Throws CounterexampleError if no anchor
/// qualifies although the hypotheses hold.
AnchorResult pick_anchor(const PointSet& x, const Subspace& h, const Rational& eps,
                         const Rational& size_fraction);
/// Uses size_fraction = density(X) - eps, which must be positive.
AnchorResult pick_anchor(const PointSet& x, const Subspace& h, const Rational& eps);

// ---------------------------------------------------------------------------
// Dichotomy and flat-or-triangle procedures

struct DichotomyOutcome {
    RefinementTrace trace;
    bool critical_branch = false; // H misses X, so the critical number is <= codim H
    int codim = 0;
    Word element = 0;             // x in H n X
    Word anchor = 0;
    std::uint64_t section_size = 0;
    BigInt sum_tuples;            // N_{k-1}(x) over A
    BigInt degenerate_tuples;     // |S_0(A, k-1; x)|
    BigInt lifted_circuits;       // (N - S_0) / (k-1)!
    std::uint64_t restricted_dfs_circuits = 0;
    std::optional<std::uint64_t> all_circuits; // every k-circuit through x, when enumerable
    VerifierReport report;
};

/// Runs the regularity / anchor / lifted-tuple chain on X and cross-checks
/// the lifted count against a direct circuit search. Requires 0 not in X,
/// X nonempty, k odd >= 5.
DichotomyOutcome dichotomy_experiment(const PointSet& x, int k, const Rational& eps,
                                      InstanceInfo info = {});

struct WeakerOutcome {
    Rational delta;
    bool triangle_branch = false;
    Subspace flat;                        // when !triangle_branch
    std::uint64_t flat_hits = 0;          // |F n X|
    std::vector<Word> triangle;           // when triangle_branch: three members of X
    int achieved_codim = 0;
    VerifierReport report;
};

/// Largest delta = 2^-j (1 <= j <= 64) with eps (eps - delta)^2 > delta.
Rational select_delta(const Rational& eps);

/// Returns either a flat F with |F n X| <= eps 2^dim(F) or a triangle of X.
WeakerOutcome weaker_procedure(const PointSet& x, const Rational& eps, InstanceInfo info = {});

/// Exhaustive check for a triple {a, b, a+b} inside X.
bool has_triangle(const PointSet& x);

// ---------------------------------------------------------------------------
// Randomised suites (one report per trial, reproducible from the seed)

std::vector<VerifierReport> run_sum_bound_suite(int n, int k, int trials, std::uint64_t seed);
std::vector<VerifierReport> run_degenerate_bound_suite(int n, int k, int trials, std::uint64_t seed);
std::vector<VerifierReport> run_triangle_bound_suite(int n, int trials, std::uint64_t seed);

/// Random instance used by the suites: density drawn from {1/16, ..., 15/16}.
PointSet random_instance(int n, std::uint64_t seed, InstanceInfo& info);

} // namespace gf2lab
