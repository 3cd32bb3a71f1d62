#include <iostream>

#include "tate/cli.hpp"

int main(int argc, char** argv) { return tate::run_cli(argc, argv, std::cout, std::cerr); }
