#include "qtrefftz/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qt::cli::run(argc, argv, std::cout, std::cerr); }
