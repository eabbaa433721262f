#include <iostream>

#include "degen/io/cli.hpp"

int main(int argc, char** argv) { return degen::io::run_cli(argc, argv, std::cout, std::cerr); }
