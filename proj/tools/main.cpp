#include <iostream>
#include <string>
#include <vector>

#include "gauge5/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gauge5::cli::run(args, std::cout, std::cerr);
}
