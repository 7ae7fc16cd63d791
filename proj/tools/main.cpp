#include <iostream>
#include <string>
#include <vector>

#include "wdvvkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    wdvvkit::cli::RunResult r = wdvvkit::cli::run(args);
    if (!r.out.empty()) std::cout << r.out;
    if (!r.err.empty()) std::cerr << r.err;
    return r.exit_code;
}
