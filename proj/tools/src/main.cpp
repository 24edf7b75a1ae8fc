#include <iostream>

#include "knc_cli/cli.hpp"

int main(int argc, char** argv) { return knc::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
