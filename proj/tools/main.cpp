/* Command-line entry point. */

#include <iostream>
#include <string>
#include <vector>

#include "tcone/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tcone::run_cli(std::move(args), std::cout, std::cerr);
}
