#include <iostream>

#include "tdp/cli.hpp"

int main(int argc, char** argv) { return tdp::cli::run(argc, argv, std::cout, std::cerr); }
