#include <iostream>
#include <string>
#include <vector>

#include "kbal/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kbal::run_cli(args, std::cout, std::cerr);
}
