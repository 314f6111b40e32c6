#include "f4gvm/cli.hpp"

#include <exception>
#include <iostream>
#include <unistd.h>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    f4gvm::cli::RunOptions opts;
    opts.color = f4gvm::cli::color_from_environment(STDOUT_FILENO);
    try {
        return f4gvm::cli::run(args, std::cout, std::cerr, opts);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
