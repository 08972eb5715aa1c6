#include "moykr/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return moykr::cli::main_entry(argc, argv, std::cout, std::cerr);
}
