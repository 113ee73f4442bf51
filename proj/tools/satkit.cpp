#include <iostream>
#include <string>
#include <vector>

#include "satkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    satkit::CliResult res = satkit::run_command(args);
    std::cout << res.output;
    return res.exit_code;
}
