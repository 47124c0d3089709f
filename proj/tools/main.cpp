#include <vector>

#include "fallcol/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fallcol::cli::run(args);
}
