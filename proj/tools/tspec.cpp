#include <iostream>
#include <string>
#include <vector>

#include "tspec/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return tspec::cli::run(args, std::cout, std::cerr);
}
