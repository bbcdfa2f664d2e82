#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace qhnf::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kNonGeneric = 2,
    kUsage = 3,
    kNotInClass = 4,
};

struct RunConfig {
    std::string command;
    std::optional<int> k, l, n;
    std::optional<int> eps0, eps_inf;  // detected from the form when unset
    std::optional<long> degree;
    std::string field = "Qt";
    std::optional<unsigned long> seed;
    std::string input;
    std::optional<std::string> a, b;
    std::string format = "human";
    std::string chart = "principal";
};

/// Runs one command line; reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs a parsed configuration.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace qhnf::cli
