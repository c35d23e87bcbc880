#include <iostream>

#include "majority/cli.hpp"

int main(int argc, char** argv) { return majority::run_cli(argc, argv, std::cout, std::cerr); }
