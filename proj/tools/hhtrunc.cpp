#include <iostream>
#include <string>
#include <vector>

#include "hochschild/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return hochschild::run_cli(args, std::cout, std::cerr);
}
