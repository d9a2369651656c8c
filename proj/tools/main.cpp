#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hyp321::cli::run(argc, argv, std::cout, std::cerr); }
