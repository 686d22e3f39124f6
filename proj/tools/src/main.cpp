#include <iostream>

#include "cyclothue/cli.hpp"

int main(int argc, char** argv) { return cyclothue::cli::run(argc, argv, std::cout, std::cerr); }
