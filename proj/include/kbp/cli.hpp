#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kbp/certify.hpp"
#include "kbp/construct.hpp"

namespace kbp::cli {

enum class Command { constants, construct, verify, certify, profile, selftest };

Command command_from_string(const std::string& name);

// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;    // claims or certificate not established
inline constexpr int kExitParameter = 2;   // validation failure
inline constexpr int kExitAccuracy = 3;    // quadrature / round-trip accuracy failure

struct RunConfig {
  Command command = Command::constants;
  int n = 4;
  int k = 2;
  double s0 = 0.5;
  double eps = 0.0625;
  construct::Variant variant = construct::Variant::parabola;
  int grid = 4096;
  int degree = certify::kDefaultDegree;
  std::optional<std::string> output_path;
  bool emit_moments = false;
  std::uint64_t seed = certify::kDefaultSeed;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string document;  // JSON (or CSV for `profile`), empty on early failure
  std::string message;   // one-line human summary for stderr
};

// Validates the configuration and executes one command. Never throws; every
// failure is mapped onto the exit-code contract. Does not write files.
RunResult run(const RunConfig& config);

// argv front end: parses flags, calls run(), writes the document to stdout or
// --out (always --out for `profile`).
int main_entry(int argc, char** argv);

}  // namespace kbp::cli
