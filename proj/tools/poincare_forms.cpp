#include <iostream>
#include <string>
#include <vector>

#include "poincare/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return poincare::cli::run(args, std::cout, std::cerr);
}
