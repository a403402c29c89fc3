#include "symprobe/protocol.hpp"

#include <cerrno>
#include <cstring>
#include <thread>

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "symprobe/errors.hpp"
#include "symprobe/json_io.hpp"

namespace symprobe {

namespace {

using nlohmann::json;

std::string frame(const json& doc) { return dump_json(doc, -1, NumberStyle::scientific17); }

json matrix_rows(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd rows_matrix(const json& j, Eigen::Index cols, const std::string& what) {
  if (!j.is_array()) throw ProtocolError(what + " must be an array of rows");
  Eigen::MatrixXd m(Eigen::Index(j.size()), std::max<Eigen::Index>(cols, 0));
  for (size_t r = 0; r < j.size(); ++r) {
    const auto& row = j[r];
    if (!row.is_array() || (cols >= 0 && Eigen::Index(row.size()) != cols)) {
      throw ProtocolError(fmt::format("{} row {} has the wrong length", what, r));
    }
    if (cols < 0) {
      cols = Eigen::Index(row.size());
      m.resize(Eigen::Index(j.size()), cols);
    }
    for (size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_number()) throw ProtocolError(fmt::format("{} entry ({}, {}) is not a number", what, r, c));
      m(Eigen::Index(r), Eigen::Index(c)) = row[c].get<double>();
    }
  }
  return m;
}

json error_frame(const json& id, const std::string& message) {
  return {{"type", "error"}, {"id", id}, {"message", message}};
}

void write_all(int fd, const char* data, size_t size) {
  while (size > 0) {
    const ssize_t n = ::write(fd, data, size);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw ProtocolError(fmt::format("write failed: {}", std::strerror(errno)));
    }
    data += n;
    size -= size_t(n);
  }
}

}  // namespace

json cloud_to_json(const DecoratedPointCloud& x) {
  json scalars = json::object();
  for (const auto& [name, m] : x.scalar_attrs) scalars[name] = matrix_rows(m);
  json vectors = json::object();
  for (const auto& [name, m] : x.vector_attrs) vectors[name] = matrix_rows(m);
  json doc = {{"positions", matrix_rows(x.positions)},
              {"scalar_attrs", scalars},
              {"vector_attrs", vectors},
              {"cell", x.cell ? matrix_rows(*x.cell) : json(nullptr)},
              {"periodic", x.periodic}};
  json info = json::object();
  for (const auto& [k, v] : x.info) info[k] = v;
  doc["info"] = info;
  return doc;
}

DecoratedPointCloud cloud_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("positions")) throw ProtocolError("cloud must be an object with positions");
  DecoratedPointCloud x(rows_matrix(doc.at("positions"), 3, "positions"));
  if (auto it = doc.find("scalar_attrs"); it != doc.end() && !it->is_null()) {
    for (const auto& [name, v] : it->items()) x.scalar_attrs[name] = rows_matrix(v, -1, "scalar attribute " + name);
  }
  if (auto it = doc.find("vector_attrs"); it != doc.end() && !it->is_null()) {
    for (const auto& [name, v] : it->items()) x.vector_attrs[name] = rows_matrix(v, 3, "vector attribute " + name);
  }
  if (auto it = doc.find("cell"); it != doc.end() && !it->is_null()) {
    const Eigen::MatrixXd c = rows_matrix(*it, 3, "cell");
    if (c.rows() != 3) throw ProtocolError("cell must have three rows");
    x.cell = Mat3(c);
  }
  if (auto it = doc.find("periodic"); it != doc.end()) x.periodic = it->get<bool>();
  if (auto it = doc.find("info"); it != doc.end() && !it->is_null()) {
    for (const auto& [k, v] : it->items()) x.info[k] = v.get<double>();
  }
  try {
    x.validate();
  } catch (const InvalidArgument& e) {
    throw ProtocolError(e.what());
  }
  return x;
}

FdChannel::FdChannel(int in_fd, int out_fd, bool owns) : in_(in_fd), out_(out_fd), owns_(owns) {}

FdChannel::~FdChannel() {
  if (!owns_) return;
  if (in_ >= 0) ::close(in_);
  if (out_ >= 0 && out_ != in_) ::close(out_);
}

bool FdChannel::read_line(std::string& line) {
  for (;;) {
    if (auto pos = buffer_.find('\n'); pos != std::string::npos) {
      line = buffer_.substr(0, pos);
      buffer_.erase(0, pos + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return true;
    }
    char chunk[65536];
    const ssize_t n = ::read(in_, chunk, sizeof chunk);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw ProtocolError(fmt::format("read failed: {}", std::strerror(errno)));
    }
    if (n == 0) {
      if (buffer_.empty()) return false;
      line = std::move(buffer_);
      buffer_.clear();
      return true;
    }
    buffer_.append(chunk, size_t(n));
  }
}

void FdChannel::write_line(const std::string& line) {
  std::string data = line;
  data += '\n';
  write_all(out_, data.data(), data.size());
}

void FdChannel::close_write() {
  if (out_ == in_) {
    ::shutdown(out_, SHUT_WR);
  } else if (out_ >= 0) {
    ::close(out_);
    out_ = -1;
  }
}

std::unique_ptr<FdChannel> connect_tcp(const std::string& host, int port) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  if (int rc = ::getaddrinfo(host.c_str(), std::to_string(port).c_str(), &hints, &res); rc != 0) {
    throw ProtocolError(fmt::format("cannot resolve {}: {}", host, gai_strerror(rc)));
  }
  int fd = -1;
  for (auto* p = res; p; p = p->ai_next) {
    fd = ::socket(p->ai_family, p->ai_socktype, p->ai_protocol);
    if (fd < 0) continue;
    if (::connect(fd, p->ai_addr, p->ai_addrlen) == 0) break;
    ::close(fd);
    fd = -1;
  }
  ::freeaddrinfo(res);
  if (fd < 0) throw ProtocolError(fmt::format("cannot connect to {}:{}", host, port));
  return std::make_unique<FdChannel>(fd, fd, true);
}

ProcessChannel::ProcessChannel(const std::vector<std::string>& argv) {
  if (argv.empty()) throw InvalidArgument("empty command");
  int to_child[2], from_child[2];
  if (::pipe(to_child) != 0 || ::pipe(from_child) != 0) throw ProtocolError("pipe failed");
  ::signal(SIGPIPE, SIG_IGN);
  pid_ = ::fork();
  if (pid_ < 0) throw ProtocolError("fork failed");
  if (pid_ == 0) {
    ::dup2(to_child[0], 0);
    ::dup2(from_child[1], 1);
    ::close(to_child[0]);
    ::close(to_child[1]);
    ::close(from_child[0]);
    ::close(from_child[1]);
    std::vector<char*> args;
    for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
    args.push_back(nullptr);
    ::execvp(args[0], args.data());
    ::_exit(127);
  }
  ::close(to_child[0]);
  ::close(from_child[1]);
  io_ = std::make_unique<FdChannel>(from_child[0], to_child[1], true);
}

ProcessChannel::~ProcessChannel() {
  io_.reset();
  if (pid_ > 0) {
    int status = 0;
    ::waitpid(pid_, &status, 0);
  }
}

bool serve_session(ProbeFunction& f, LineChannel& channel, const ServerOptions& options) {
  std::string line;
  if (!channel.read_line(line)) return false;
  json hello;
  try {
    hello = json::parse(line);
  } catch (const json::exception&) {
    channel.write_line(frame(error_frame(nullptr, "expected a hello frame")));
    return false;
  }
  if (!hello.is_object() || hello.value("type", "") != "hello" || hello.value("protocol", "") != kProtocolName) {
    channel.write_line(frame(error_frame(nullptr, fmt::format("expected a hello frame for protocol {}", kProtocolName))));
    return false;
  }
  const auto version = hello.value("version", -1);
  if (version != kProtocolVersion) {
    channel.write_line(frame(error_frame(
        nullptr, fmt::format("protocol version {} is not supported; this server speaks version {}", version, kProtocolVersion))));
    return false;
  }
  json schema = json::object();
  for (const auto& [tap, dim] : f.schema()) schema[tap] = dim;
  json irreps = json::object();
  for (const auto& [tap, label] : f.declared_irreps) irreps[tap] = label.to_string();
  channel.write_line(frame({{"type", "hello"},
                            {"protocol", kProtocolName},
                            {"version", kProtocolVersion},
                            {"schema", schema},
                            {"irreps", irreps},
                            {"stateless", options.stateless}}));

  std::set<std::int64_t> seen;
  auto evaluate = [&](const json& cloud, const std::vector<std::string>& taps) {
    const auto values = f.evaluate(cloud_from_json(cloud), taps);
    json out = json::object();
    for (const auto& tap : taps) {
      auto it = values.find(tap);
      if (it == values.end()) throw ProtocolError(fmt::format("model did not return tap '{}'", tap));
      if (it->second.size() != f.schema().at(tap)) {
        throw ProtocolError(fmt::format("model returned {} values for tap '{}', schema says {}", it->second.size(), tap,
                                        f.schema().at(tap)));
      }
      out[tap] = std::vector<double>(it->second.data(), it->second.data() + it->second.size());
    }
    return out;
  };

  while (channel.read_line(line)) {
    if (line.empty()) continue;
    json request;
    try {
      request = json::parse(line);
    } catch (const json::exception&) {
      channel.write_line(frame(error_frame(nullptr, "malformed frame: not valid JSON")));
      continue;
    }
    json id = request.is_object() && request.contains("id") ? request["id"] : json(nullptr);
    try {
      if (!request.is_object()) throw ProtocolError("frame must be a JSON object");
      const auto type = request.value("type", "");
      if (type == "bye") return true;
      if (type != "probe" && type != "probe_batch") throw ProtocolError(fmt::format("unknown frame type '{}'", type));
      if (!id.is_number_integer()) throw ProtocolError("request id must be an integer");
      if (!seen.insert(id.get<std::int64_t>()).second) throw ProtocolError(fmt::format("duplicate request id {}", id.dump()));
      if (!request.contains("taps") || !request["taps"].is_array() || request["taps"].empty()) {
        throw ProtocolError("taps must be a non-empty array");
      }
      const auto taps = request["taps"].get<std::vector<std::string>>();
      for (const auto& tap : taps) {
        if (!f.schema().count(tap)) throw ProtocolError(fmt::format("unknown tap '{}'", tap));
      }
      json response = {{"type", "result"}, {"id", id}};
      if (type == "probe") {
        response["vectors"] = evaluate(request.at("cloud"), taps);
      } else {
        json results = json::array();
        for (const auto& cloud : request.at("clouds")) results.push_back(evaluate(cloud, taps));
        response["results"] = results;
      }
      channel.write_line(frame(response));
    } catch (const std::exception& e) {
      channel.write_line(frame(error_frame(id, e.what())));
    }
  }
  return true;
}

TcpServer::TcpServer(int port) {
  fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd_ < 0) throw ProtocolError("socket failed");
  int one = 1;
  ::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = htons(std::uint16_t(port));
  if (::bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 || ::listen(fd_, 16) != 0) {
    ::close(fd_);
    throw ProtocolError(fmt::format("cannot listen on port {}: {}", port, std::strerror(errno)));
  }
  socklen_t len = sizeof addr;
  ::getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  port_ = ntohs(addr.sin_port);
}

TcpServer::~TcpServer() {
  if (fd_ >= 0) ::close(fd_);
}

void TcpServer::stop() {
  stopping_ = true;
  ::shutdown(fd_, SHUT_RDWR);
}

void TcpServer::serve(ProbeFunction& f, int max_sessions, const ServerOptions& options) {
  ::signal(SIGPIPE, SIG_IGN);
  std::vector<std::thread> workers;
  for (int served = 0; max_sessions < 0 || served < max_sessions; ++served) {
    const int client = ::accept(fd_, nullptr, nullptr);
    if (client < 0) {
      if (errno == EINTR && !stopping_) {
        --served;
        continue;
      }
      break;
    }
    auto session = [&f, options, client] {
      FdChannel channel(client, client, true);
      try {
        serve_session(f, channel, options);
      } catch (const ProtocolError&) {
        // Peer went away mid-session.
      }
    };
    if (f.concurrent_safe()) {
      workers.emplace_back(session);
    } else {
      session();
    }
  }
  for (auto& w : workers) w.join();
}

RemoteProbe::RemoteProbe(std::unique_ptr<LineChannel> channel) : channel_(std::move(channel)) {
  channel_->write_line(frame({{"type", "hello"}, {"protocol", kProtocolName}, {"version", kProtocolVersion}}));
  std::string line;
  if (!channel_->read_line(line)) throw ProtocolError("connection closed during handshake");
  json reply;
  try {
    reply = json::parse(line);
  } catch (const json::exception& e) {
    throw ProtocolError(fmt::format("malformed handshake reply: {}", e.what()));
  }
  if (reply.value("type", "") == "error") {
    throw ProtocolError(fmt::format("connection refused: {}", reply.value("message", "no reason given")));
  }
  if (reply.value("type", "") != "hello" || reply.value("protocol", "") != kProtocolName) {
    throw ProtocolError("server did not answer with a hello frame");
  }
  if (reply.value("version", -1) != kProtocolVersion) {
    throw ProtocolError(fmt::format("connection refused: server speaks protocol version {}, client speaks {}",
                                    reply.value("version", -1), kProtocolVersion));
  }
  for (const auto& [tap, dim] : reply.at("schema").items()) schema_[tap] = dim.get<int>();
  if (auto it = reply.find("irreps"); it != reply.end()) {
    for (const auto& [tap, label] : it->items()) declared_irreps.emplace(tap, IrrepLabel::parse(label.get<std::string>()));
  }
  stateless_ = reply.value("stateless", false);
}

RemoteProbe::~RemoteProbe() {
  if (broken_) return;
  try {
    channel_->write_line(frame({{"type", "bye"}}));
  } catch (const std::exception&) {
    // Nothing to do if the server is gone already.
  }
}

json RemoteProbe::round_trip(const json& request) {
  if (broken_) throw ProtocolError("session is closed after an earlier protocol failure");
  channel_->write_line(frame(request));
  std::string line;
  if (!channel_->read_line(line)) {
    broken_ = true;
    throw ProtocolError("server closed the connection");
  }
  json reply;
  try {
    reply = json::parse(line);
  } catch (const json::exception& e) {
    broken_ = true;
    throw ProtocolError(fmt::format("malformed reply: {}", e.what()));
  }
  const auto type = reply.value("type", "");
  if (type == "hello") {
    broken_ = true;
    throw ProtocolError("server renegotiated its schema mid-session");
  }
  if (reply.value("id", json(nullptr)) != request.at("id")) {
    broken_ = true;
    throw ProtocolError(fmt::format("reply id {} does not match request id {}", reply.value("id", json(nullptr)).dump(),
                                    request.at("id").dump()));
  }
  if (type == "error") throw ProtocolError(fmt::format("server error: {}", reply.value("message", "")));
  if (type != "result") {
    broken_ = true;
    throw ProtocolError(fmt::format("unexpected frame type '{}'", type));
  }
  return reply;
}

TapValues RemoteProbe::decode(const json& vectors, const std::vector<std::string>& taps) {
  TapValues out;
  for (const auto& tap : taps) {
    if (!vectors.contains(tap)) throw ProtocolError(fmt::format("reply lacks tap '{}'", tap));
    const auto& arr = vectors.at(tap);
    if (!arr.is_array()) throw ProtocolError(fmt::format("tap '{}' is not an array", tap));
    if (int(arr.size()) != schema_.at(tap)) {
      broken_ = true;
      throw ProtocolError(fmt::format("tap '{}' changed dimension mid-session ({} values, schema says {})", tap,
                                      arr.size(), schema_.at(tap)));
    }
    Eigen::VectorXd v(Eigen::Index(arr.size()));
    for (size_t k = 0; k < arr.size(); ++k) {
      v(Eigen::Index(k)) = arr[k].is_null() ? std::numeric_limits<double>::quiet_NaN() : arr[k].get<double>();
    }
    out[tap] = std::move(v);
  }
  return out;
}

TapValues RemoteProbe::evaluate(const DecoratedPointCloud& x, const std::vector<std::string>& taps) {
  const json reply = round_trip({{"type", "probe"}, {"id", next_id_++}, {"taps", taps}, {"cloud", cloud_to_json(x)}});
  return decode(reply.at("vectors"), taps);
}

std::vector<TapValues> RemoteProbe::evaluate_batch(const std::vector<DecoratedPointCloud>& clouds,
                                                   const std::vector<std::string>& taps) {
  json arr = json::array();
  for (const auto& x : clouds) arr.push_back(cloud_to_json(x));
  const json reply = round_trip({{"type", "probe_batch"}, {"id", next_id_++}, {"taps", taps}, {"clouds", arr}});
  const auto& results = reply.at("results");
  if (results.size() != clouds.size()) throw ProtocolError("batch reply has the wrong number of results");
  std::vector<TapValues> out;
  for (const auto& r : results) out.push_back(decode(r, taps));
  return out;
}

FunctionProbe echo_probe(int points) {
  return FunctionProbe("positions", 3 * points, [points](const DecoratedPointCloud& x) {
    if (x.size() != points) throw InvalidArgument(fmt::format("echo server expects {} points, got {}", points, x.size()));
    Eigen::VectorXd v(3 * points);
    for (int i = 0; i < points; ++i) v.segment(3 * i, 3) = x.positions.row(i).transpose();
    return v;
  });
}

}  // namespace symprobe
