#include <iostream>

#include "isogeny/cli.hpp"

int main(int argc, char** argv) { return isogeny::cli::run(argc, argv, std::cout, std::cerr); }
