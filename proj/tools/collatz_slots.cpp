#include <collatz/cli.hpp>

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    return collatz::cli::main(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
