#include <cstdlib>
#include <iostream>

#include "tribokit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    tribokit::cli::Environment env{std::cout, std::cerr,
                                   [](const std::string& name) -> std::optional<std::string> {
                                       const char* v = std::getenv(name.c_str());
                                       if (v == nullptr) return std::nullopt;
                                       return std::string(v);
                                   },
                                   {}};
    return tribokit::cli::run(args, env);
}
