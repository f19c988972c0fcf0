#include <iostream>
#include <string>
#include <vector>

#include "foldrun/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return foldrun::run_cli(args, std::cout, std::cerr);
}
