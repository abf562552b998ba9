#include <iostream>

#include "ngon/cli.hpp"

int main(int argc, char** argv) { return ngon::cli::run(argc, argv, std::cout, std::cerr); }
