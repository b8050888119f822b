#include "gf2lab/report.hpp"

namespace gf2lab {

namespace {

Json basis_json(const Subspace& h) {
    Json arr = Json::array();
    for (Word r : h.basis()) arr.push_back(format_bits(r, h.ambient_dim()));
    return arr;
}

} // namespace

Json to_json(const VerifierReport& r, bool timestamps) {
    Json j;
    j["statement"] = r.statement;
    j["instance"] = {{"generator", r.instance.generator},
                     {"seed", std::to_string(r.instance.seed)},
                     {"n", r.instance.n},
                     {"k", r.instance.k},
                     {"params", r.instance.params}};
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"label", c.label},
                          {"lhs", c.lhs.str()},
                          {"relation", c.relation},
                          {"rhs", c.rhs.str()},
                          {"holds", c.holds()}});
    j["checks"] = std::move(checks);
    Json details = Json::object();
    for (const auto& [key, value] : r.details) details[key] = value;
    j["details"] = std::move(details);
    j["pass"] = r.pass;
    if (timestamps) j["runtime_ms"] = r.runtime_ms;
    return j;
}

Json to_json(const ConstantsLedger& c) {
    Json j;
    j["alpha"] = to_string(c.alpha);
    j["k"] = c.k;
    j["epsilon"] = to_string(c.epsilon);
    j["alpha0"] = to_string(c.alpha0);
    j["s0"] = c.s0_text();
    j["s0_tower_height"] = c.tower_height.str();
    j["r0"] = "s0 + " + std::to_string(c.r0_offset);
    j["r0_offset"] = c.r0_offset;
    j["c"] = "s0 + " + std::to_string(c.c_offset);
    j["selection_margin"] = to_string(c.selection_margin);
    j["beta_bracket"] = to_string(c.beta_bracket);
    j["log2_beta"] = c.log2_beta_text();
    j["log2_beta_s0_coeff"] = c.log2_beta_s0_coeff;
    j["log2_beta_constant"] = "log2(" + to_string(c.log2_beta_constant()) + ")";
    return j;
}

Json to_json(const CriticalResult& c) {
    Json j;
    j["value"] = c.value;
    j["witness_basis"] = basis_json(c.witness);
    j["method"] = std::string(to_string(c.method));
    j["nodes_expanded"] = c.nodes_expanded;
    return j;
}

Json to_json(const UniformityReport& u) {
    Json j;
    j["n"] = u.ambient_dim;
    j["vacuous"] = u.vacuous;
    j["U"] = std::to_string(u.max_abs_correlation);
    j["epsilon_star"] = to_string(u.epsilon_star);
    j["witness"] = u.vacuous ? std::string() : format_bits(u.witness, u.ambient_dim);
    return j;
}

Json to_json(const RegularityCert& c) {
    Json j;
    j["subspace_basis"] = basis_json(c.subspace);
    j["codim"] = c.subspace.codim();
    j["epsilon"] = to_string(c.epsilon);
    j["regular"] = c.regular;
    Json bad = Json::array();
    for (const auto& b : c.bad_cosets)
        bad.push_back({{"representative", format_bits(b.representative, c.subspace.ambient_dim())},
                       {"witness", format_bits(b.witness, c.subspace.dim())},
                       {"correlation", std::to_string(b.correlation)}});
    j["bad_cosets"] = std::move(bad);
    j["bad_mass"] = c.bad_mass.str();
    return j;
}

Json to_json(const RefinementTrace& t) {
    Json j;
    Json steps = Json::array();
    const int n = t.final.subspace.ambient_dim();
    for (const auto& s : t.steps)
        steps.push_back({{"character", format_bits(s.character, n)},
                         {"codim_after", s.codim_after},
                         {"bad_mass_before", s.bad_mass_before.str()}});
    j["steps"] = std::move(steps);
    j["final"] = to_json(t.final);
    return j;
}

Json to_json(const CircuitCensus& c) {
    Json j;
    j["k"] = c.k;
    Json per = Json::array();
    for (std::size_t i = 0; i < c.elements.size(); ++i)
        per.push_back({{"element", format_bits(c.elements[i], c.ambient_dim)}, {"count", std::to_string(c.counts[i])}});
    j["per_element"] = std::move(per);
    j["max_count"] = std::to_string(c.max_count);
    j["max_witness"] = c.elements.empty() ? std::string() : format_bits(c.max_witness, c.ambient_dim);
    return j;
}

std::string emit_reports(std::span<const VerifierReport> reports, bool timestamps) {
    if (reports.empty()) return "[]\n";
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, timestamps));
    return arr.dump(2) + "\n";
}

std::string census_csv(const CircuitCensus& c) {
    std::string out = "element,count\n";
    for (std::size_t i = 0; i < c.elements.size(); ++i)
        out += format_bits(c.elements[i], c.ambient_dim) + "," + std::to_string(c.counts[i]) + "\n";
    return out;
}

} // namespace gf2lab
