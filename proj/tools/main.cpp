#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return fpsl::cli::run(argc, argv, std::cout, std::cerr);
}
