#include <string>
#include <vector>

#include "recform/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return recform::cli::run(args);
}
