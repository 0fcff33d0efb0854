#include <iostream>

#include "wpi/cli.hpp"

int main(int argc, char** argv) { return wpi::cli::run(argc, argv, std::cout, std::cerr); }
