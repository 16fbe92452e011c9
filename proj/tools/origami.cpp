#include <iostream>

#include "origami/cli.hpp"

int main(int argc, char** argv) { return origami::cli::run(argc, argv, std::cout, std::cerr); }
