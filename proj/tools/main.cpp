#include <iostream>

#include "gpc/cli.hpp"

int main(int argc, char** argv) { return gpc::cli::run(argc, argv, std::cout, std::cerr); }
