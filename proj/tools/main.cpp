#include <iostream>
#include <string>
#include <vector>

#include "spinecensus/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return spinecensus::cli::main(args, std::cout, std::cerr);
}
