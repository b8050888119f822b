#include "gf2lab/checks/acceptance.hpp"

#include "gf2lab/cli.hpp"

#include <cstring>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    gf2lab::acceptance::Options options;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--fast") == 0) options.fast = true;
    options.runner = [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code = gf2lab::cli::run(args, out, err);
        return "exit " + std::to_string(code) + "\n" + out.str() + err.str();
    };
    options.on_result = [](const gf2lab::acceptance::CriterionResult& r) {
        std::cout << gf2lab::acceptance::format_line(r) << std::endl;
    };
    auto results = gf2lab::acceptance::run_all(options);
    int failed = 0;
    for (const auto& r : results) failed += r.pass ? 0 : 1;
    std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
