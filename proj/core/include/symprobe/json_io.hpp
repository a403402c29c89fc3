#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace symprobe {

enum class NumberStyle {
  /// %.17g: shortest form with up to 17 significant digits. Reports and CSV.
  general17,
  /// %.16e: always exactly 17 significant digits. Wire protocol.
  scientific17,
};

std::string format_double(double value, NumberStyle style = NumberStyle::general17);

/// Like json::dump, but floating-point numbers are written with 17 significant
/// digits. Non-finite numbers become null. indent < 0 gives a single line.
std::string dump_json(const nlohmann::json& doc, int indent = -1, NumberStyle style = NumberStyle::general17);

}  // namespace symprobe
