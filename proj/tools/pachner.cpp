#include <iostream>

#include "tri/cli.hpp"

int main(int argc, char** argv) {
    return tri::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
