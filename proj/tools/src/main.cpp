#include <iostream>

#include "bitplane_lab_cli/cli.hpp"

int main(int argc, char** argv) { return bpl::cli::run_cli(argc, argv, std::cout, std::cerr); }
