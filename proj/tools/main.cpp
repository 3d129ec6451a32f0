#include <iostream>

#include "fanning/cli.hpp"

int main(int argc, char** argv) { return fanning::cli::run(argc, argv, std::cout, std::cerr); }
