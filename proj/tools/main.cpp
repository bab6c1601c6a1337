#include <iostream>

#include "chabauty/cli.hpp"

int main(int argc, char** argv) { return chabauty::cli::run(argc, argv, std::cout, std::cerr); }
