#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dirspaces/json_io.hpp"

namespace dirspaces::cli {

/// One CLI invocation. Flags mirror these keys; a --config JSON file may
/// supply any of them, with explicit flags taking precedence.
struct RunConfig {
    std::string command;  ///< norm | weights | kernel | compose | check-symbol | classify | lemma2 | profile
    std::optional<io::Json> measure;
    std::optional<io::Json> symbol;
    std::optional<io::Json> series;
    std::size_t truncation = 64;
    double p = 2.0;
    std::uint64_t seed = 20130101;
    bool csv = false;
    bool matrix = false;
    std::optional<Complex> s;
    std::optional<Complex> w;
    std::vector<double> sigmas;
    std::optional<double> eta;
    double eps = 0.0;
    std::optional<std::size_t> n;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kValidationError = 2;
inline constexpr int kNumericError = 3;

std::string usage();

/// Parses argv-style arguments (without the program name). Throws
/// ValidationError on bad input.
RunConfig parse_args(const std::vector<std::string>& args);

/// Dispatches the command, writing the report to out and diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with exit-code mapping.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dirspaces::cli
