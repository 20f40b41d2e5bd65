#include "gaussrom/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return gaussrom::run_cli(argc, argv, std::cout, std::cerr); }
