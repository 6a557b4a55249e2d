#include <iostream>

#include "pwgraph/commands.hpp"

int main(int argc, char** argv) {
    return pwg::run_cli(argc, argv, std::cout, std::cerr);
}
