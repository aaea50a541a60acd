#include <cstdio>
#include <string>
#include <vector>

#include "zf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    zf::CommandOutcome outcome = zf::run_command(args);
    if (!outcome.output.empty()) std::fputs(outcome.output.c_str(), stdout);
    if (!outcome.error.empty()) std::fprintf(stderr, "%s\n", outcome.error.c_str());
    return outcome.exit_code;
}
