#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const spinlab::cli::CommandResult result = spinlab::cli::dispatch(args);
    std::cout << result.render();
    for (const auto& line : result.diagnostics)
        std::cerr << line << '\n';
    return result.exit_code();
}
