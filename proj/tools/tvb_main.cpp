#include <iostream>
#include <string>
#include <vector>

#include "tvb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tvb::run(args, std::cout, std::cerr);
}
