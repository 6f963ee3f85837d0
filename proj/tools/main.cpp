#include <iostream>
#include <vector>

#include "affbgg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return affbgg::dispatch(args, std::cout, std::cerr);
}
