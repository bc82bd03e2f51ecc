#include <iostream>

#include "hurstkit/cli.hpp"

int main(int argc, char** argv) { return hurstkit::cli::run(argc, argv, std::cout, std::cerr); }
