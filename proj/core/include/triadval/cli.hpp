#pragma once

#include <string>

namespace triadval::cli {

enum class Command { Validate, Engine, Simulate, Census, Report };

// Process exit statuses. Every execution path maps to exactly one of these.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;    // validate found violations
inline constexpr int kExitEngineFailure = 2; // engine run ended in Failure
inline constexpr int kExitInputError = 3;    // unreadable/unparseable/invalid input
inline constexpr int kExitUsage = 64;        // unknown command or bad invocation

struct RunManifest {
    Command command = Command::Validate;
    std::string goal;
    std::string catalog;
    std::string criteria;
    std::string config;
    std::string universe;
    std::string scenario;
    std::string out_dir;
    double tolerance = 0.0;

    /// Throws std::invalid_argument when a required input for the command is
    /// missing.
    void validate() const;
};

/// Executes one command, writing artifacts into the output directory.
/// Returns the process exit status; diagnostics go to stderr.
int run(const RunManifest& manifest);

} // namespace triadval::cli
