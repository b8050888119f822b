#include "gf2lab/cli.hpp"

#include "gf2lab/checks/acceptance.hpp"
#include "gf2lab/critical.hpp"
#include "gf2lab/errors.hpp"
#include "gf2lab/harness.hpp"
#include "gf2lab/matroid.hpp"
#include "gf2lab/parallel.hpp"
#include "gf2lab/regularity.hpp"
#include "gf2lab/report.hpp"
#include "gf2lab/spectral.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace gf2lab::cli {

namespace {

struct Config {
    unsigned threads = 0;
    bool no_timestamps = false;
    bool self_test = false;

    std::string kind;
    std::string input;
    std::string output;
    std::string subspace;
    std::string trace;
    std::string x;
    std::string gamma;
    std::string p = "1/2";
    std::string eps;
    std::string alpha;
    std::uint64_t max_size = UINT64_MAX;
    std::uint64_t seed = 1;
    int n = 0;
    int k = 0;
    int trials = 1;
    bool json = false;
};

PointSet read_set(const std::string& path, std::ostream& err) {
    std::vector<std::string> warnings;
    PointSet x = load(path, &warnings);
    for (const auto& w : warnings) err << "warning: " << path << ": " << w << "\n";
    return x;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot open " + path + " for writing");
    f << text;
    if (!f) throw InvalidArgument("cannot write " + path);
}

Rational rational_flag(const std::string& text, const char* flag) {
    try {
        return parse_rational(text);
    } catch (const InvalidArgument&) {
        throw InvalidArgument(std::string(flag) + " expects p/q, got '" + text + "'");
    }
}

Rational positive_eps(const std::string& text) {
    Rational eps = rational_flag(text, "--eps");
    if (eps <= 0) throw InvalidArgument("--eps must be positive");
    return eps;
}

Word vector_flag(const std::string& text, int n, const char* flag) {
    GF2Vector v = GF2Vector::parse(text);
    if (v.dim() != n)
        throw DimensionMismatch(std::string(flag) + " has length " + std::to_string(v.dim()) + ", expected " +
                                std::to_string(n));
    return v.bits();
}

bool all_pass(const std::vector<VerifierReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const VerifierReport& r) { return r.pass; });
}

int emit(const std::vector<VerifierReport>& reports, const Config& c, std::ostream& out) {
    out << emit_reports(reports, !c.no_timestamps);
    return all_pass(reports) ? kOk : kFailed;
}

int run_gen(const Config& c, std::ostream& out, std::ostream& err) {
    GeneratorParams params;
    if (!c.gamma.empty()) params.gamma = vector_flag(c.gamma, c.n, "--gamma");
    params.p = rational_flag(c.p, "--p");
    params.max_size = c.max_size;
    params.path = c.input;
    if (c.kind == "from-file" && c.input.empty()) throw InvalidArgument("from-file needs --input");
    PointSet x = c.kind == "from-file" ? read_set(c.input, err) : generate(c.kind, c.n, params, c.seed);
    std::string text = format_gf2set(x);
    if (c.output.empty()) out << text;
    else write_text(c.output, text);
    return kOk;
}

int run_uniformity(const Config& c, std::ostream& out, std::ostream& err) {
    UniformityReport u = uniformity(read_set(c.input, err));
    if (c.json) {
        out << to_json(u).dump(2) << "\n";
        return kOk;
    }
    if (u.vacuous) {
        out << "vacuous (n = 0)\n";
        return kOk;
    }
    out << "U " << u.max_abs_correlation << "\n"
        << "epsilon_star " << to_string(u.epsilon_star) << "\n"
        << "witness " << format_bits(u.witness, u.ambient_dim) << "\n";
    return kOk;
}

int run_count_sums(const Config& c, std::ostream& out, std::ostream& err) {
    PointSet a = read_set(c.input, err);
    std::vector<BigInt> counts = count_sum_tuples(a, c.k);
    out << "x,N_k(x)\n";
    for (Word x = 0; x < counts.size(); ++x) out << format_bits(x, a.ambient_dim()) << "," << counts[x] << "\n";
    return kOk;
}

int run_census(const Config& c, std::ostream& out, std::ostream& err) {
    CircuitCensus cen = census(read_set(c.input, err), c.k);
    if (c.json) out << to_json(cen).dump(2) << "\n";
    else out << census_csv(cen);
    return kOk;
}

int run_circuits(const Config& c, std::ostream& out, std::ostream& err) {
    PointSet x = read_set(c.input, err);
    Word v = vector_flag(c.x, x.ambient_dim(), "-x");
    for (const Circuit& circuit : circuits_through(x, v, c.k)) {
        for (std::size_t i = 0; i < circuit.elements.size(); ++i)
            out << (i ? " " : "") << format_bits(circuit.elements[i], x.ambient_dim());
        out << "\n";
    }
    return kOk;
}

int run_critical(const Config& c, bool exact, std::ostream& out, std::ostream& err) {
    PointSet x = read_set(c.input, err);
    CriticalResult r = exact ? critical_number(x) : greedy_cover(x);
    out << to_json(r).dump(2) << "\n";
    return kOk;
}

int run_regularity_check(const Config& c, std::ostream& out, std::ostream& err) {
    PointSet x = read_set(c.input, err);
    std::ifstream f(c.subspace);
    if (!f) throw InvalidArgument("cannot open " + c.subspace);
    Subspace h = parse_subspace(f, x.ambient_dim());
    RegularityCert cert = is_regular(x, h, positive_eps(c.eps));
    out << to_json(cert).dump(2) << "\n";
    return cert.regular ? kOk : kFailed;
}

int run_regularity_find(const Config& c, std::ostream& out, std::ostream& err) {
    PointSet x = read_set(c.input, err);
    RefinementTrace trace = find_regular_subspace(x, positive_eps(c.eps));
    if (!c.trace.empty()) write_text(c.trace, to_json(trace).dump(2) + "\n");
    out << to_json(trace.final).dump(2) << "\n";
    return trace.final.regular ? kOk : kFailed;
}

int run_suite(const std::string& which, const Config& c, std::ostream& out) {
    if (c.trials < 0) throw InvalidArgument("--trials must be nonnegative");
    std::vector<VerifierReport> reports;
    if (which == "lemma22") reports = run_sum_bound_suite(c.n, c.k, c.trials, c.seed);
    else if (which == "lemma23") reports = run_degenerate_bound_suite(c.n, c.k, c.trials, c.seed);
    else reports = run_triangle_bound_suite(c.n, c.trials, c.seed);
    return emit(reports, c, out);
}

InstanceInfo file_info(const Config& c) {
    InstanceInfo info;
    info.generator = "from-file";
    info.params = c.input;
    return info;
}

int run_dichotomy(const Config& c, std::ostream& out, std::ostream& err) {
    PointSet x = read_set(c.input, err);
    DichotomyOutcome d = dichotomy_experiment(x, c.k, positive_eps(c.eps), file_info(c));
    return emit({d.report}, c, out);
}

int run_weaker(const Config& c, std::ostream& out, std::ostream& err) {
    PointSet x = read_set(c.input, err);
    WeakerOutcome w = weaker_procedure(x, positive_eps(c.eps), file_info(c));
    return emit({w.report}, c, out);
}

int run_constants(const Config& c, std::ostream& out) {
    out << to_json(theorem_constants(rational_flag(c.alpha, "--alpha"), c.k)).dump(2) << "\n";
    return kOk;
}

int run_self_test(std::ostream& out) {
    acceptance::Options options;
    options.fast = true;
    options.on_result = [&out](const acceptance::CriterionResult& r) { out << acceptance::format_line(r) << std::endl; };
    auto results = acceptance::run_all(options);
    bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
    return ok ? kOk : kFailed;
}

void dump_counterexample(const CounterexampleError& e, const std::vector<std::string>& args, std::ostream& err) {
    Json j;
    j["error"] = e.what();
    j["command"] = args;
    j["dump"] = e.dump();
    try {
        write_text("counterexample.gf2set", e.dump());
        write_text("counterexample.json", j.dump(2) + "\n");
        err << "counterexample written to counterexample.gf2set and counterexample.json\n";
    } catch (const Error& io) {
        err << "could not write counterexample dump: " << io.what() << "\n";
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Exact experiments on point sets in GF(2)^n", "gf2lab"};
    app.require_subcommand(0, 1);
    app.add_option("--threads", c.threads, "Worker threads (default: GF2LAB_THREADS or all cores)");
    app.add_flag("--no-timestamps", c.no_timestamps, "Omit runtimes from reports");
    app.add_flag("--self-test", c.self_test, "Run the fast acceptance subset");

    auto* gen = app.add_subcommand("gen", "Generate a point set");
    gen->add_option("kind", c.kind, "projective | affine-layer | random-density | random-triangle-free | from-file")
        ->required()
        ->check(CLI::IsMember({"projective", "affine-layer", "random-density", "random-triangle-free", "from-file"}));
    gen->add_option("-n", c.n, "Ambient dimension");
    gen->add_option("--gamma", c.gamma, "Character of the affine layer, as a bit string");
    gen->add_option("--p", c.p, "Density for random-density (p/q)");
    gen->add_option("--max-size", c.max_size, "Size cap for random-triangle-free");
    gen->add_option("--input", c.input, "Source file for from-file");
    gen->add_option("--seed", c.seed, "Generator seed");
    gen->add_option("-o,--output", c.output, "Output file (default: stdout)");

    auto* spectral = app.add_subcommand("spectral", "Fourier statistics");
    spectral->require_subcommand(1);
    auto* unif = spectral->add_subcommand("uniformity", "Largest nontrivial character sum");
    unif->add_option("file", c.input)->required();
    unif->add_flag("--json", c.json);
    auto* sums = spectral->add_subcommand("count-sums", "CSV of k-tuple sum counts");
    sums->add_option("file", c.input)->required();
    sums->add_option("-k", c.k)->required();

    auto* matroid = app.add_subcommand("matroid", "Circuits of M(X)");
    matroid->require_subcommand(1);
    auto* cen = matroid->add_subcommand("census", "k-circuits through every element");
    cen->add_option("file", c.input)->required();
    cen->add_option("-k", c.k)->required();
    cen->add_flag("--json", c.json);
    auto* circ = matroid->add_subcommand("circuits", "List k-circuits through one element");
    circ->add_option("file", c.input)->required();
    circ->add_option("-x", c.x)->required();
    circ->add_option("-k", c.k)->required();

    auto* crit = app.add_subcommand("critical", "Critical number");
    crit->require_subcommand(1);
    auto* exact = crit->add_subcommand("exact", "Branch and bound");
    exact->add_option("file", c.input)->required();
    auto* greedy = crit->add_subcommand("greedy", "Greedy cover upper bound");
    greedy->add_option("file", c.input)->required();

    auto* reg = app.add_subcommand("regularity", "Regular subspaces");
    reg->require_subcommand(1);
    auto* check = reg->add_subcommand("check", "Certify a subspace");
    check->add_option("file", c.input)->required();
    check->add_option("--subspace", c.subspace, "File with one basis vector per line")->required();
    check->add_option("--eps", c.eps)->required();
    auto* find = reg->add_subcommand("find", "Refine until regular");
    find->add_option("file", c.input)->required();
    find->add_option("--eps", c.eps)->required();
    find->add_option("--trace", c.trace, "Write the refinement trace as JSON");

    auto* verify = app.add_subcommand("verify", "Inequality suites and procedures");
    verify->require_subcommand(1);
    std::vector<CLI::App*> suites;
    for (const char* name : {"lemma22", "lemma23", "lemma41"}) {
        auto* s = verify->add_subcommand(name, "Random suite");
        s->add_option("--n", c.n)->required();
        if (std::string(name) != "lemma41") s->add_option("--k", c.k)->required();
        s->add_option("--trials", c.trials);
        s->add_option("--seed", c.seed);
        suites.push_back(s);
    }
    auto* dich = verify->add_subcommand("dichotomy", "Critical number or many circuits");
    dich->add_option("file", c.input)->required();
    dich->add_option("-k", c.k)->required();
    dich->add_option("--eps", c.eps)->required();
    auto* weak = verify->add_subcommand("weaker", "Sparse flat or triangle");
    weak->add_option("file", c.input)->required();
    weak->add_option("--eps", c.eps)->required();

    auto* consts = app.add_subcommand("constants", "Constants ledger");
    consts->add_option("--alpha", c.alpha)->required();
    consts->add_option("-k", c.k)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << "\n" << app.help();
        return kUsage;
    }

    if (c.threads > 0) set_thread_count(c.threads);

    try {
        if (c.self_test) return run_self_test(out);
        if (*gen) return run_gen(c, out, err);
        if (*unif) return run_uniformity(c, out, err);
        if (*sums) return run_count_sums(c, out, err);
        if (*cen) return run_census(c, out, err);
        if (*circ) return run_circuits(c, out, err);
        if (*exact) return run_critical(c, true, out, err);
        if (*greedy) return run_critical(c, false, out, err);
        if (*check) return run_regularity_check(c, out, err);
        if (*find) return run_regularity_find(c, out, err);
        for (auto* s : suites)
            if (*s) return run_suite(s->get_name(), c, out);
        if (*dich) return run_dichotomy(c, out, err);
        if (*weak) return run_weaker(c, out, err);
        if (*consts) return run_constants(c, out);
        err << app.help();
        return kUsage;
    } catch (const CounterexampleError& e) {
        err << "counterexample: " << e.what() << "\n";
        dump_counterexample(e, args, err);
        return kFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::logic_error& e) {
        err << "internal check failed: " << e.what() << "\n";
        return kFailed;
    }
}

} // namespace gf2lab::cli
