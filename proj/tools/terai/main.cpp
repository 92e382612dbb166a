#include <iostream>

#include "terai/cli.hpp"

int main(int argc, char** argv) { return terai::cli::run(argc, argv, std::cout, std::cerr); }
