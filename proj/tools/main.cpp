#include <iostream>

#include "qhpp/cli/cli.hpp"

int main(int argc, char** argv) {
    return qhpp::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
