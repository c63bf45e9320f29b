#include <iostream>

#include "motzgen/cli.hpp"

int main(int argc, char** argv) {
    return motzgen::cli::run(argc, argv, std::cout, std::cerr);
}
