#include <iostream>

#include "gamma_periods/cli/run.hpp"

int main(int argc, char** argv) { return gamma_periods::cli::run(argc, argv, std::cout, std::cerr); }
