#include <iostream>

#include "arlab_cli/cli.hpp"

int main(int argc, char** argv) { return arlab::cli::run(argc, argv, std::cout, std::cerr); }
