#include <iostream>

#include "zbrace/cli.hpp"

int main(int argc, char** argv) { return zbrace::run_cli(argc, argv, std::cout, std::cerr); }
