#include <iostream>
#include <string>
#include <vector>

#include "qeuler/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qeuler::run_command(args, std::cout, std::cerr);
}
