#include <iostream>

#include "actsets/cli.hpp"

int main(int argc, char** argv) {
    return actsets::cli::run(argc, argv, std::cout, std::cerr);
}
