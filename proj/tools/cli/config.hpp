#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symprobe/o3.hpp"

namespace symprobe::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ValueKind { integer, real, boolean, text, list, label };

struct KeySpec {
  /// A name ending in '.' is a family: "claim." accepts claim.<anything>.
  std::string name;
  ValueKind kind = ValueKind::text;
  /// Used when the key is absent. Ignored for required keys.
  std::string fallback;
  std::string help;
  bool required = false;
};

/// key = value settings for one command, checked against its key table.
///
/// Files hold one assignment per line; '#' starts a comment. Later assignments
/// (command-line overrides) replace earlier ones, but a key may appear only once
/// per file.
class RunConfig {
 public:
  explicit RunConfig(std::vector<KeySpec> keys);

  void read_file(const std::filesystem::path& path);
  void read_text(std::string_view text, const std::string& source);
  /// One "key=value" assignment. Throws ConfigError for unknown keys.
  void set(std::string_view assignment, const std::string& source = "command line");

  /// Required keys present and every value parses as its kind.
  void validate() const;

  bool has(const std::string& key) const;
  long integer(const std::string& key) const;
  double real(const std::string& key) const;
  bool boolean(const std::string& key) const;
  std::string text(const std::string& key) const;
  std::vector<std::string> list(const std::string& key) const;
  IrrepLabel label(const std::string& key) const;
  /// Members of a family, keyed by the part after the prefix.
  std::map<std::string, std::string> family(const std::string& prefix) const;

  /// Every key with its effective value, sorted; a reproducible record of the run.
  std::string resolved() const;
  const std::vector<KeySpec>& keys() const { return keys_; }

 private:
  const KeySpec& spec(const std::string& key) const;
  std::string raw(const std::string& key) const;

  std::vector<KeySpec> keys_;
  std::map<std::string, std::string> values_;
};

/// Closest known key within a small edit distance, or "" if none is close.
std::string suggest_key(const std::string& key, const std::vector<KeySpec>& keys);

/// Help text listing the keys of a command.
std::string describe_keys(const std::vector<KeySpec>& keys);

/// Seed of the named sub-stream of a run seed. Streams with different names are
/// independent, so adding a consumer never shifts another one's draws.
std::uint64_t stream_seed(std::uint64_t seed, std::string_view name);

}  // namespace symprobe::cli
