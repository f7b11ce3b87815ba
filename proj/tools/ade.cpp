#include <ade/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return ade::cli::run(argc, argv, std::cout, std::cerr); }
