#include <iostream>

#include "wright/cli/cli.hpp"

int main(int argc, char** argv)
{
    return wright::cli::run(argc, argv, std::cout, std::cerr);
}
