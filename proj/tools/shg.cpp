#include "shg/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return shg::run_cli(argc, argv, std::cout, std::cerr); }
