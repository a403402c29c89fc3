#include "symprobe/json_io.hpp"

#include <cmath>

#include <fmt/format.h>

namespace symprobe {

std::string format_double(double value, NumberStyle style) {
  if (!std::isfinite(value)) return "null";
  std::string s = style == NumberStyle::general17 ? fmt::format("{:.17g}", value) : fmt::format("{:.16e}", value);
  // Keep a marker that this is a float so readers do not narrow it to an integer.
  if (style == NumberStyle::general17 && s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

namespace {

void write(std::string& out, const nlohmann::json& j, int indent, int depth, NumberStyle style) {
  using value_t = nlohmann::json::value_t;
  auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(size_t(indent * d), ' ');
  };
  switch (j.type()) {
    case value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += nlohmann::json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        write(out, it.value(), indent, depth + 1, style);
      }
      newline(depth);
      out += '}';
      return;
    }
    case value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        write(out, v, indent, depth + 1, style);
      }
      newline(depth);
      out += ']';
      return;
    }
    case value_t::number_float:
      out += format_double(j.get<double>(), style);
      return;
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_json(const nlohmann::json& doc, int indent, NumberStyle style) {
  std::string out;
  write(out, doc, indent, 0, style);
  return out;
}

}  // namespace symprobe
