// Command-line front end: jones, homfly, kr, verify, table.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace moykr::cli {

enum ExitCode : int { Ok = 0, VerificationFailed = 1, UsageFailure = 2 };

struct RunConfig {
    std::string command;
    int n = 2;
    std::optional<int> k;
    std::optional<std::string> braid;
    std::string format = "text";
    int n_min = 2, n_max = 4;
    int k_min = 1, k_max = 5;
    bool spec_jones = false;
};

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);
// Parses argv and runs; usage problems return UsageFailure.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace moykr::cli
