#include <iostream>

#include "ccf/cli/commands.hpp"

int main(int argc, char** argv) { return ccf::cli::run(argc, argv, std::cout, std::cerr); }
