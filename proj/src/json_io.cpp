#include "kbp/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace kbp {
namespace {

void write(const nlohmann::json& j, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {  // std::map order: sorted
        if (!first) out += ",\n";
        first = false;
        out += pad + nlohmann::json(key).dump() + ": ";
        write(value, depth + 1, out);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ",\n";
        out += pad;
        write(j[i], depth + 1, out);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      std::string s(buf);
      if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
      out += s;
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_stable(const nlohmann::json& j) {
  std::string out;
  write(j, 0, out);
  out += "\n";
  return out;
}

}  // namespace kbp
