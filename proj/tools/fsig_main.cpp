#include <iostream>

#include "fsig/cli.hpp"

int main(int argc, char** argv) { return fsig::run_cli(argc, argv, std::cout, std::cerr); }
