#pragma once

#include <string>

#include <json.hpp>

namespace kbp {

// Deterministic rendering: object keys sorted, two-space indent, floating
// values printed with 17 significant digits (non-finite values become null).
std::string dump_stable(const nlohmann::json& j);

}  // namespace kbp
