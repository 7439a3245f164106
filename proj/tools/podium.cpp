#include <cstdlib>
#include <iostream>

#include "podium/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> env_order;
    if (const char* v = std::getenv("PODIUM_ORDER"))
        env_order = v;
    return podium::cli::run(args, std::cout, std::cerr, env_order);
}
