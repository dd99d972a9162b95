#include <iostream>

#include "lamina/cli.hpp"

int main(int argc, char** argv) { return lamina::cli::run(argc, argv, std::cout, std::cerr); }
