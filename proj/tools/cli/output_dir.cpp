#include "output_dir.hpp"

#include <cctype>
#include <cerrno>
#include <cstring>
#include <fstream>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fmt/format.h>

namespace symprobe::cli {

namespace fs = std::filesystem;

OutputDir::OutputDir(const fs::path& root) : root_(root) {
  std::error_code ec;
  fs::create_directories(root_, ec);
  if (ec) throw std::runtime_error(fmt::format("cannot create output directory {}: {}", root_.string(), ec.message()));
  const auto lock_path = root_ / ".symprobe.lock";
  lock_fd_ = ::open(lock_path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
  if (lock_fd_ < 0) {
    throw std::runtime_error(fmt::format("cannot open {}: {}", lock_path.string(), std::strerror(errno)));
  }
  if (::flock(lock_fd_, LOCK_EX | LOCK_NB) != 0) {
    ::close(lock_fd_);
    lock_fd_ = -1;
    throw LockBusy(fmt::format("another symprobe process is writing to {}; wait for it or choose another output",
                               root_.string()));
  }
  for (const auto& sub : {reports(), plots(), checkpoints(), logs(), data()}) fs::create_directories(sub);
}

OutputDir::~OutputDir() {
  if (lock_fd_ >= 0) {
    ::flock(lock_fd_, LOCK_UN);
    ::close(lock_fd_);
  }
}

void OutputDir::write(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error(fmt::format("cannot write {}", path.string()));
    out << content;
    if (!out) throw std::runtime_error(fmt::format("write to {} failed", path.string()));
  }
  fs::rename(tmp, path);
}

std::string file_stem(const std::string& name) {
  std::string out;
  for (char c : name) out.push_back(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.' ? c : '_');
  return out;
}

}  // namespace symprobe::cli
