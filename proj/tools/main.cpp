#include <iostream>
#include <string>
#include <vector>

#include "apnlike/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return apnlike::cli::run(std::move(args), std::cout, std::cerr);
}
