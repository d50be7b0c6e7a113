#include <iostream>

#include "omplab/cli.hpp"

int main(int argc, char** argv) { return omplab::run_cli(argc, argv, std::cout, std::cerr); }
