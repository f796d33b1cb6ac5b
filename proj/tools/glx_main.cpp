#include <iostream>

#include "glx/cli.hpp"

int main(int argc, char** argv) { return glx::run_cli(argc, argv, std::cout, std::cerr); }
