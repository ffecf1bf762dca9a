#include <iostream>

#include "genmean/cli.hpp"

int main(int argc, char** argv) { return genmean::cli::dispatch(argc, argv, std::cout, std::cerr); }
