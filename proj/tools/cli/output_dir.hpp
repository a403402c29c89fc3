#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

namespace symprobe::cli {

class LockBusy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An output directory with reports/, plots/, checkpoints/, logs/ and data/.
///
/// Holds an exclusive advisory lock on <root>/.symprobe.lock for its lifetime,
/// so two runs cannot write the same directory at once. The lock dies with the
/// process; a leftover lock file is harmless.
class OutputDir {
 public:
  explicit OutputDir(const std::filesystem::path& root);
  ~OutputDir();
  OutputDir(const OutputDir&) = delete;
  OutputDir& operator=(const OutputDir&) = delete;

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path reports() const { return root_ / "reports"; }
  std::filesystem::path plots() const { return root_ / "plots"; }
  std::filesystem::path checkpoints() const { return root_ / "checkpoints"; }
  std::filesystem::path logs() const { return root_ / "logs"; }
  std::filesystem::path data() const { return root_ / "data"; }

  /// Writes through a temporary file and renames, so readers never see half a file.
  static void write(const std::filesystem::path& path, const std::string& content);

 private:
  std::filesystem::path root_;
  int lock_fd_ = -1;
};

/// Tap names may contain ':'; keep file names portable.
std::string file_stem(const std::string& name);

}  // namespace symprobe::cli
