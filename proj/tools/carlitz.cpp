#include <iostream>

#include "carlitz/cli.hpp"

int main(int argc, char** argv) { return carlitz::cli::run(argc, argv, std::cout, std::cerr); }
