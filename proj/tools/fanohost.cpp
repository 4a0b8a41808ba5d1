#include "fanohost/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return fanohost::run_cli(argc, argv, std::cout, std::cerr); }
