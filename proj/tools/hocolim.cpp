// hocolim.cpp - command line entry point.

#include <iostream>
#include <string>
#include <vector>

#include "hocolimkit/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return hocolimkit::cli::run(args, {std::cin, std::cout, std::cerr});
}
