#include <iostream>

#include "bvs_cli/cli.hpp"

int main(int argc, char** argv) { return bvs::cli::main_entry(argc, argv, std::cout, std::cerr); }
