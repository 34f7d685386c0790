#ifndef POLYDUAL_CLI_HPP
#define POLYDUAL_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace polydual::cli {

inline constexpr const char* kToolName = "polydual";
inline constexpr const char* kVersion = "0.1.0";

struct Options {
    bool json = false;    // machine-readable report to stdout (text otherwise)
    bool verify = false;  // re-parse and re-verify emitted certificates
    std::uint64_t seed = 42;
    std::size_t max_generators = 100000;
    std::size_t max_subsets = 4096;
    std::optional<std::string> out_path; // always JSON
};

struct Result {
    int exit_code; // 0 verdict computed, 1 input error, 2 resource limit
    std::string json_text;
    std::string human_text;
};

/// Commands: check, certify, consistency, fm, hidden, diagnose, optimal, kkt.
Result run_command(const std::string& command, const std::string& problem_path,
                   const Options& options);

/// Bundled golden suite plus seeded invariant sweeps. The report is
/// byte-stable for a fixed seed.
Result run_selftest(const Options& options);

} // namespace polydual::cli

#endif
