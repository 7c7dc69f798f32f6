#include "glts/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return glts::cli::run(argc, argv, std::cout, std::cerr); }
