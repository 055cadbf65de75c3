#include <iostream>

#include "linsets/cli.hpp"

int main(int argc, char** argv) { return linsets::run_cli(argc, argv, std::cout, std::cerr); }
