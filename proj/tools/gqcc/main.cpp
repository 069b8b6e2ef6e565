#include <iostream>

#include "gqcc/cli.hpp"

int main(int argc, char** argv) { return gqcc::cli::main_entry(argc, argv, std::cout, std::cerr); }
