#include <iostream>

#include "quiverkit/cli.hpp"

int main(int argc, char** argv) {
    return quiverkit::run_cli(argc, argv, std::cout, std::cerr);
}
