#include <iostream>
#include <string>
#include <vector>

#include "prodcolor/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return prodcolor::run_cli(args, std::cout, std::cerr);
}
