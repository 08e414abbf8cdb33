#include "symbern/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = symbern::cli::run(args);
    std::cout << result.text;
    return static_cast<int>(result.exit_code);
}
