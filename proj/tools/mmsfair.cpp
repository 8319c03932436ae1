#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = mmsfair::cli::run(args);
    for (const auto& [path, content] : result.files) {
        std::ofstream file(path, std::ios::binary);
        if (!file || !(file << content)) {
            std::cerr << "error: cannot write '" << path << "'\n";
            return mmsfair::cli::kUsageError;
        }
    }
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
