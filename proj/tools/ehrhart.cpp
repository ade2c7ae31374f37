#include <iostream>

#include "ehrhart/cli/commands.hpp"

int main(int argc, char** argv) { return ehrhart::cli::run(argc, argv, std::cout, std::cerr); }
