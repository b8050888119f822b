#include "gf2lab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gf2lab::cli::run(args, std::cout, std::cerr);
}
