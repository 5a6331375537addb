#include "hecke/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hecke::main_entry(argc, argv, std::cout, std::cerr); }
