#include "tmoments/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return tmoments::cli::main_entry(argc, argv, std::cout, std::cerr);
}
