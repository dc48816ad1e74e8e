#include "hitchin_lab/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return hitchin::lab::run_cli(argc, argv, std::cout, std::cerr); }
