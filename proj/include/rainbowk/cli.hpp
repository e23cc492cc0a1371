#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rainbowk::cli {

enum ExitCode : int {
    kOk = 0,
    kNotConnected = 1,  // verify: some pair has fewer than k rainbow paths
    kBadParameter = 2,  // includes r < g(k), k > r, u == v
    kIoFailure = 3,
    kMalformedInput = 4,  // bad file or bad vertex label
    kCapExceeded = 5,
    kGuardRefused = 6,
};

/// Runs one subcommand (construct, verify, witness, oracle, classify).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rainbowk::cli
