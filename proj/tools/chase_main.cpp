// chase_main.cpp - process entry point for the chase CLI
#include <iostream>
#include <string>
#include <vector>

#include "chase/driver.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return chase::run_cli(args, std::cout, std::cerr);
}
