#include "arithgrass/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return arithgrass::cli::run_cli(argc, argv, std::cout, std::cerr); }
