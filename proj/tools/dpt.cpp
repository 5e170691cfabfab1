#include <iostream>

#include "dpt/cli.hpp"

int main(int argc, char** argv) { return dpt::cli::main_entry(argc, argv, std::cout, std::cerr); }
