#include <iostream>

#include "wittbox/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wittbox::run(args, std::cout, std::cerr);
}
