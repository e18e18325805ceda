#include <iostream>

#include "hamfix/cli.hpp"

int main(int argc, char** argv) { return hamfix::run_cli(argc, argv, std::cout, std::cerr); }
