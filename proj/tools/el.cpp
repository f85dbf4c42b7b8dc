#include <iostream>

#include "el/cli.hpp"

int main(int argc, char** argv) { return el::run_command(argc, argv, std::cout, std::cerr); }
