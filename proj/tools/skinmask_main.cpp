#include <iostream>

#include "skinmask/cli.hpp"

int main(int argc, char** argv) { return skinmask::cli::run(argc, argv, std::cout, std::cerr); }
