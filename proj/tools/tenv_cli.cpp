#include "tenv/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) { return tenv::cli::run(argc, argv, std::cout, std::cerr); }
