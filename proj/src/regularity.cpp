#include "gf2lab/regularity.hpp"

#include "gf2lab/errors.hpp"
#include "gf2lab/parallel.hpp"
#include "gf2lab/spectral.hpp"

#include <map>
#include <optional>

namespace gf2lab {

RegularityCert is_regular(const PointSet& x, const Subspace& h, const Rational& eps) {
    if (eps <= 0) throw InvalidArgument("epsilon must be positive");
    if (h.ambient_dim() != x.ambient_dim()) throw DimensionMismatch("subspace and point set dimensions differ");

    const std::vector<Word> reps = coset_reps(h);
    const Rational threshold = eps * pow2(h.dim()); // a section is bad iff U > eps * |H|
    std::vector<std::optional<BadCoset>> verdicts(reps.size());
    parallel_for(
        reps.size(),
        [&](std::size_t i) {
            PointSet sec = section(x, h, reps[i]).points;
            UniformityReport u = uniformity(sec);
            if (!u.vacuous && Rational(u.max_abs_correlation) > threshold)
                verdicts[i] = BadCoset{reps[i], u.witness, u.max_abs_correlation};
        },
        16);

    RegularityCert cert;
    cert.subspace = h;
    cert.epsilon = eps;
    for (auto& v : verdicts)
        if (v) cert.bad_cosets.push_back(*v);
    cert.bad_mass = BigInt(cert.bad_cosets.size()) << h.dim();
    cert.regular = Rational(cert.bad_mass) <= eps * pow2(x.ambient_dim());
    return cert;
}

RefinementTrace find_regular_subspace(const PointSet& x, const Rational& eps) {
    if (eps <= 0) throw InvalidArgument("epsilon must be positive");
    RefinementTrace trace;
    Subspace h = Subspace::full(x.ambient_dim());
    for (;;) {
        RegularityCert cert = is_regular(x, h, eps);
        if (cert.regular) {
            trace.final = std::move(cert);
            return trace;
        }
        SectionCoordinates coords(h);
        std::map<Word, std::uint64_t> votes;
        for (const BadCoset& b : cert.bad_cosets) ++votes[coords.lift_character(b.witness)];
        Word choice = 0;
        std::uint64_t best = 0;
        for (auto [gamma, count] : votes) // ascending gamma, so ties keep the smallest
            if (count > best) {
                best = count;
                choice = gamma;
            }
        h = h.intersect_kernel(choice);
        trace.steps.push_back(RefinementStep{choice, h.codim(), cert.bad_mass});
    }
}

} // namespace gf2lab
