#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gf2lab::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    double budget_seconds = 0; // 0 means no time budget
    std::string detail;
};

/// Runs a command line through the tool and returns everything it wrote,
/// including the contents of output files. Used for the rerun criterion.
using CommandRunner = std::function<std::string(const std::vector<std::string>& args)>;

struct Options {
    bool fast = false;        // reduced trial counts, for --self-test
    std::uint64_t seed = 20240601;
    CommandRunner runner;     // optional; enables the command-line rerun checks
    std::function<void(const CriterionResult&)> on_result; // called as each criterion finishes
};

std::vector<CriterionResult> run_all(const Options& options);

/// One line per criterion: "PASS [3] name (1.2 s / 180 s): detail".
std::string format_line(const CriterionResult& r);

} // namespace gf2lab::acceptance
