#include <iostream>

#include "floqlat/cli/app.hpp"

int main(int argc, char** argv) { return floqlat::cli::dispatch(argc, argv, std::cout, std::cerr); }
