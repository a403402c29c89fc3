#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "symprobe/pointcloud.hpp"
#include "symprobe/probe.hpp"

namespace symprobe {

/// Newline-delimited JSON probe protocol. See docs/protocol.md for the frames.
constexpr int kProtocolVersion = 1;
constexpr const char* kProtocolName = "symprobe-probe";

nlohmann::json cloud_to_json(const DecoratedPointCloud& x);
/// Throws ProtocolError on a malformed cloud object.
DecoratedPointCloud cloud_from_json(const nlohmann::json& doc);

/// One line of text in each direction; the newline is not part of the line.
class LineChannel {
 public:
  virtual ~LineChannel() = default;
  /// False at end of stream.
  virtual bool read_line(std::string& line) = 0;
  virtual void write_line(const std::string& line) = 0;
};

/// Reads and writes raw file descriptors (pipes or sockets). Owns them if asked.
class FdChannel : public LineChannel {
 public:
  FdChannel(int in_fd, int out_fd, bool owns);
  ~FdChannel() override;
  FdChannel(const FdChannel&) = delete;
  FdChannel& operator=(const FdChannel&) = delete;

  bool read_line(std::string& line) override;
  void write_line(const std::string& line) override;
  /// Shuts down the write side so the peer sees end of stream.
  void close_write();

 private:
  int in_, out_;
  bool owns_;
  std::string buffer_;
};

std::unique_ptr<FdChannel> connect_tcp(const std::string& host, int port);

/// Child process speaking the protocol on its stdin/stdout.
class ProcessChannel : public LineChannel {
 public:
  explicit ProcessChannel(const std::vector<std::string>& argv);
  ~ProcessChannel() override;

  bool read_line(std::string& line) override { return io_->read_line(line); }
  void write_line(const std::string& line) override { io_->write_line(line); }

 private:
  std::unique_ptr<FdChannel> io_;
  int pid_ = -1;
};

struct ServerOptions {
  bool stateless = true;
};

/// Runs one session: handshake, then request/response until "bye" or end of
/// stream. Malformed or failing requests get error frames; the session goes on.
/// Returns false if the handshake was refused.
bool serve_session(ProbeFunction& f, LineChannel& channel, const ServerOptions& options = {});

class TcpServer {
 public:
  /// Binds 127.0.0.1:port; port 0 picks a free port.
  explicit TcpServer(int port);
  ~TcpServer();

  int port() const { return port_; }
  /// Accepts connections until stop() or max_sessions have been served
  /// (negative: unlimited). Sessions run on their own threads when f is
  /// concurrent-safe, otherwise one after another.
  void serve(ProbeFunction& f, int max_sessions = -1, const ServerOptions& options = {});
  void stop();

 private:
  int fd_ = -1;
  int port_ = 0;
  std::atomic<bool> stopping_{false};
};

/// Client side: a ProbeFunction whose evaluations happen in another process.
class RemoteProbe : public ProbeFunction {
 public:
  /// Performs the handshake; throws ProtocolError if the server refuses.
  explicit RemoteProbe(std::unique_ptr<LineChannel> channel);
  ~RemoteProbe() override;

  const TapSchema& schema() const override { return schema_; }
  TapValues evaluate(const DecoratedPointCloud& x, const std::vector<std::string>& taps) override;
  std::vector<TapValues> evaluate_batch(const std::vector<DecoratedPointCloud>& clouds,
                                        const std::vector<std::string>& taps);
  bool stateless() const { return stateless_; }

 private:
  nlohmann::json round_trip(const nlohmann::json& request);
  TapValues decode(const nlohmann::json& vectors, const std::vector<std::string>& taps);

  std::unique_ptr<LineChannel> channel_;
  TapSchema schema_;
  bool stateless_ = false;
  bool broken_ = false;
  std::int64_t next_id_ = 1;
};

/// Returns the positions of an n-point cloud flattened row by row (tap "positions").
FunctionProbe echo_probe(int points);

}  // namespace symprobe
