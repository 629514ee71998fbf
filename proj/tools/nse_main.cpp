#include <iostream>

#include "nse/cli.hpp"

int main(int argc, char** argv) { return nse::cli::run(argc, argv, std::cout, std::cerr); }
