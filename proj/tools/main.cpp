#include <iostream>
#include <string>
#include <vector>

#include "detkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return detkit::run_cli(std::move(args), std::cout, std::cerr);
}
