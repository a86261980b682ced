#include <iostream>

#include "qsw_cli/cli.hpp"

int main(int argc, char** argv) { return qsw::cli::main_entry(argc, argv, std::cout, std::cerr); }
