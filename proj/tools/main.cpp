#include <iostream>
#include <string>
#include <vector>

#include "momentcara/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return momentcara::cli::run(std::move(args), std::cout, std::cerr);
}
