#include <iostream>

#include "randlp/cli.hpp"

int main(int argc, char** argv) { return randlp::run_cli(argc, argv, std::cout, std::cerr); }
