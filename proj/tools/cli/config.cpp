#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <charconv>
#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "symprobe/errors.hpp"

namespace symprobe::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

bool is_family(const KeySpec& k) { return !k.name.empty() && k.name.back() == '.'; }

size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
      // adjacent transposition
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) cur[j] = std::min(cur[j], prev[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

const char* kind_name(ValueKind kind) {
  switch (kind) {
    case ValueKind::integer: return "integer";
    case ValueKind::real: return "number";
    case ValueKind::boolean: return "boolean";
    case ValueKind::text: return "text";
    case ValueKind::list: return "comma-separated list";
    case ValueKind::label: return "irrep label such as 1,-1";
  }
  return "value";
}

template <typename T>
bool parse_number(const std::string& s, T& out) {
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::optional<bool> parse_bool(const std::string& s) {
  if (s == "true" || s == "yes" || s == "on" || s == "1") return true;
  if (s == "false" || s == "no" || s == "off" || s == "0") return false;
  return std::nullopt;
}

}  // namespace

RunConfig::RunConfig(std::vector<KeySpec> keys) : keys_(std::move(keys)) {}

void RunConfig::read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot read config file {}", path.string()));
  std::stringstream buffer;
  buffer << in.rdbuf();
  read_text(buffer.str(), path.string());
}

void RunConfig::read_text(std::string_view text, const std::string& source) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::set<std::string> seen;
  for (long number = 1; std::getline(in, line); ++number) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    const auto where = fmt::format("{}:{}", source, number);
    if (line.find('=') == std::string::npos) throw ConfigError(fmt::format("{}: expected key = value", where));
    const auto key = trim(line.substr(0, line.find('=')));
    if (!seen.insert(key).second) throw ConfigError(fmt::format("{}: key '{}' is set twice", where, key));
    set(line, where);
  }
}

void RunConfig::set(std::string_view assignment, const std::string& source) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError(fmt::format("{}: expected key=value, got '{}'", source, assignment));
  }
  const auto key = trim(assignment.substr(0, eq));
  const auto value = trim(assignment.substr(eq + 1));
  if (key.empty()) throw ConfigError(fmt::format("{}: empty key", source));
  spec(key);
  values_[key] = value;
}

const KeySpec& RunConfig::spec(const std::string& key) const {
  for (const auto& k : keys_) {
    if (k.name == key && !is_family(k)) return k;
    if (is_family(k) && key.size() > k.name.size() && key.compare(0, k.name.size(), k.name) == 0) return k;
  }
  auto message = fmt::format("unknown key '{}'", key);
  if (auto hint = suggest_key(key, keys_); !hint.empty()) message += fmt::format("; did you mean '{}'?", hint);
  throw ConfigError(message);
}

void RunConfig::validate() const {
  for (const auto& k : keys_) {
    if (k.required && !is_family(k) && !values_.count(k.name)) {
      throw ConfigError(fmt::format("missing required key '{}' ({})", k.name, k.help));
    }
  }
  for (const auto& [key, value] : values_) {
    const auto& k = spec(key);
    bool ok = true;
    switch (k.kind) {
      case ValueKind::integer: {
        long v;
        ok = parse_number(value, v);
        break;
      }
      case ValueKind::real: {
        double v;
        ok = parse_number(value, v) && std::isfinite(v);
        break;
      }
      case ValueKind::boolean: ok = parse_bool(value).has_value(); break;
      case ValueKind::label:
        try {
          IrrepLabel::parse(value);
        } catch (const InvalidArgument&) {
          ok = false;
        }
        break;
      case ValueKind::text:
      case ValueKind::list: break;
    }
    if (!ok) throw ConfigError(fmt::format("key '{}': expected {}, got '{}'", key, kind_name(k.kind), value));
  }
}

bool RunConfig::has(const std::string& key) const { return values_.count(key) > 0; }

std::string RunConfig::raw(const std::string& key) const {
  if (auto it = values_.find(key); it != values_.end()) return it->second;
  const auto& k = spec(key);
  if (k.required) throw ConfigError(fmt::format("missing required key '{}'", key));
  return k.fallback;
}

long RunConfig::integer(const std::string& key) const {
  long v = 0;
  const auto s = raw(key);
  if (!parse_number(s, v)) throw ConfigError(fmt::format("key '{}': expected integer, got '{}'", key, s));
  return v;
}

double RunConfig::real(const std::string& key) const {
  double v = 0;
  const auto s = raw(key);
  if (!parse_number(s, v)) throw ConfigError(fmt::format("key '{}': expected number, got '{}'", key, s));
  return v;
}

bool RunConfig::boolean(const std::string& key) const {
  const auto s = raw(key);
  auto v = parse_bool(s);
  if (!v) throw ConfigError(fmt::format("key '{}': expected boolean, got '{}'", key, s));
  return *v;
}

std::string RunConfig::text(const std::string& key) const { return raw(key); }

std::vector<std::string> RunConfig::list(const std::string& key) const {
  std::vector<std::string> out;
  std::stringstream in(raw(key));
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

IrrepLabel RunConfig::label(const std::string& key) const {
  try {
    return IrrepLabel::parse(raw(key));
  } catch (const InvalidArgument& e) {
    throw ConfigError(fmt::format("key '{}': {}", key, e.what()));
  }
}

std::map<std::string, std::string> RunConfig::family(const std::string& prefix) const {
  std::map<std::string, std::string> out;
  for (const auto& [key, value] : values_) {
    if (key.size() > prefix.size() && key.compare(0, prefix.size(), prefix) == 0) out[key.substr(prefix.size())] = value;
  }
  return out;
}

std::string RunConfig::resolved() const {
  std::map<std::string, std::string> all;
  for (const auto& k : keys_) {
    if (!is_family(k) && !k.required) all[k.name] = k.fallback;
  }
  for (const auto& [key, value] : values_) all[key] = value;
  std::string out;
  for (const auto& [key, value] : all) out += fmt::format("{} = {}\n", key, value);
  return out;
}

std::string suggest_key(const std::string& key, const std::vector<KeySpec>& keys) {
  std::string best;
  size_t best_distance = std::max<size_t>(2, key.size() / 4) + 1;
  for (const auto& k : keys) {
    auto candidate = k.name;
    if (is_family(k)) {
      // compare the prefix part only
      const auto dot = key.find('.');
      if (dot == std::string::npos) continue;
      const auto d = edit_distance(key.substr(0, dot + 1), k.name);
      if (d < best_distance) {
        best_distance = d;
        best = k.name + key.substr(dot + 1);
      }
      continue;
    }
    std::string lower = key;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    const auto d = std::min(edit_distance(key, candidate), edit_distance(lower, candidate));
    if (d < best_distance) {
      best_distance = d;
      best = candidate;
    }
  }
  return best;
}

std::string describe_keys(const std::vector<KeySpec>& keys) {
  std::string out = "Config keys (key = value, in a file given with -c or as arguments):\n";
  for (const auto& k : keys) {
    auto name = is_family(k) ? k.name + "<tap>" : k.name;
    std::string note = k.required ? "required" : (k.fallback.empty() ? "optional" : "default " + k.fallback);
    out += fmt::format("  {:<26} {} [{}]\n", name, k.help, note);
  }
  return out;
}

std::uint64_t stream_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(h), std::uint32_t(h >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (std::uint64_t(out[0]) << 32) | out[1];
}

}  // namespace symprobe::cli
