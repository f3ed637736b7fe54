#include <iostream>

#include "redalg/cli/commands.hpp"

int main(int argc, char** argv) { return redalg::cli::run(argc, argv, std::cout, std::cerr); }
