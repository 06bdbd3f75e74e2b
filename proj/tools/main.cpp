#include <iostream>

#include "kratzer/cli.hpp"

int main(int argc, char** argv) { return kratzer::cli::run(argc, argv, std::cout, std::cerr); }
