#pragma once

#include <json.hpp>

#include "kbp/cli.hpp"

namespace kbp::cli {

// Quick invariant suite behind `selftest`: {"passed", "failed", "checks": [...]}.
// Randomized checks draw from config.seed.
nlohmann::json run_selftest(const RunConfig& config);

}  // namespace kbp::cli
