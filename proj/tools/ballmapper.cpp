#include "ballmapper/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return ballmapper::cli::run(argc, argv, std::cout, std::cerr);
}
