#include <iostream>

#include "coxstar/cli.hpp"

int main(int argc, char** argv) { return coxstar::run(argc, argv, std::cout, std::cerr); }
