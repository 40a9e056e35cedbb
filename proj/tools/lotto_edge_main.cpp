#include <iostream>
#include <string>
#include <vector>

#include "lotto_edge/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return lotto_edge::run_cli(args, std::cout, std::cerr);
}
