#include <vector>

#include "graphnil/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return graphnil::run_cli(std::move(args));
}
