#include <string>
#include <vector>

#include "plcat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return plcat::cli::run(args);
}
