#include <iostream>

#include "wehrl/cli.hpp"

int main(int argc, char** argv) { return wehrl::cli::run(argc, argv, std::cout, std::cerr); }
