#include <iostream>

#include "alphabwm/cli.hpp"

int main(int argc, char** argv) {
    return alphabwm::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
