#include <iostream>

#include "qhnf/cli.hpp"

int main(int argc, char** argv) { return qhnf::cli::run(argc, argv, std::cout, std::cerr); }
