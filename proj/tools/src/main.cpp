#include "wblowup_cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return wblowup::cli::run(argc, argv, std::cout, std::cerr); }
