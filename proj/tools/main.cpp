#include <iostream>

#include "smoothcurve/cli/commands.hpp"

int main(int argc, char** argv)
{
    return smoothcurve::cli::run(argc, argv, std::cout, std::cerr);
}
