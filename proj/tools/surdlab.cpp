#include <iostream>

#include "surdlab/explorer.hpp"

int main(int argc, char** argv) {
    return surdlab::run_cli(argc, argv, std::cout, std::cerr);
}
