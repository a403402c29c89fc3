#include <fstream>
#include <random>
#include <thread>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "symprobe/errors.hpp"
#include "symprobe/metrics.hpp"
#include "symprobe/protocol.hpp"
#include "symprobe/quadrature.hpp"
#include "symprobe/targets.hpp"
#include "script_channel.hpp"
#include "test_probes.hpp"

using namespace symprobe;

namespace {

struct Transcript {
  std::vector<std::string> client, server;
};

Transcript read_transcript() {
  std::ifstream in(std::string(SYMPROBE_TEST_DATA_DIR) + "/probe_transcript.ndjson");
  Transcript t;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("> ", 0) == 0) t.client.push_back(line.substr(2));
    if (line.rfind("< ", 0) == 0) t.server.push_back(line.substr(2));
  }
  return t;
}

// Serves f on an ephemeral port for exactly `sessions` connections.
struct LocalServer {
  LocalServer(ProbeFunction& f, int sessions) : server(0), thread([this, &f, sessions] { server.serve(f, sessions); }) {}
  ~LocalServer() {
    server.stop();
    thread.join();
  }
  TcpServer server;
  std::thread thread;
};

}  // namespace

TEST(Protocol, ServerMatchesGoldenTranscript) {
  const auto t = read_transcript();
  ASSERT_EQ(t.client.size(), 7u);
  fixtures::ScriptChannel channel(t.client);
  auto echo = echo_probe(2);
  EXPECT_TRUE(serve_session(echo, channel));
  EXPECT_EQ(channel.written, t.server);
}

TEST(Protocol, ClientMatchesGoldenTranscript) {
  const auto t = read_transcript();
  auto channel = std::make_unique<fixtures::ScriptChannel>(std::vector<std::string>{t.server[0], t.server[1], t.server[2]});
  auto* raw = channel.get();
  DecoratedPointCloud a(Positions(2, 3)), b(Positions(2, 3));
  a.positions << 0.1, -0.25, 1.0 / 3.0, 2.0, 1e-300, -7.5;
  b.positions << -1.0, 0.0, 0.5, 0.125, 3.0e5, 2.0 / 7.0;
  b.scalar_attrs["species"] = Eigen::Vector2d(6, 1);
  {
    RemoteProbe remote(std::move(channel));
    EXPECT_EQ(remote.schema().at("positions"), 6);
    EXPECT_TRUE(remote.stateless());
    const auto va = remote.evaluate(a, {"positions"});
    EXPECT_EQ(va.at("positions")(4), 1e-300);
    const auto batch = remote.evaluate_batch({a, b}, {"positions"});
    EXPECT_EQ(batch[1].at("positions")(5), 2.0 / 7.0);
    ASSERT_EQ(raw->written.size(), 3u);
    for (size_t k = 0; k < 3; ++k) EXPECT_EQ(raw->written[k], t.client[k]) << k;
  }
}

TEST(Protocol, EchoRoundTripOverTcp) {
  std::mt19937_64 rng(40);
  auto echo = echo_probe(6);
  LocalServer local(echo, 1);
  RemoteProbe remote(connect_tcp("127.0.0.1", local.server.port()));
  for (int t = 0; t < 5; ++t) {
    auto x = fixtures::random_cloud(rng, 6, 1e3);
    const auto v = remote.evaluate(x, {"positions"}).at("positions");
    for (int i = 0; i < 6; ++i) {
      for (int k = 0; k < 3; ++k) EXPECT_LE(std::abs(v(3 * i + k) - x.positions(i, k)), 1e-15 * std::abs(x.positions(i, k)));
    }
  }
}

TEST(Protocol, RemoteMetricsMatchLocal) {
  std::mt19937_64 rng(41);
  const auto grid = build_o3_grid(2);
  auto local_f = oracle_probe(IrrepLabel(1, -1));
  auto gyr = gyration_probe();
  LocalServer oracle_server(local_f, 1);
  LocalServer gyration_server(gyr, 1);
  RemoteProbe remote(connect_tcp("127.0.0.1", oracle_server.server.port()));
  RemoteProbe remote_gyr(connect_tcp("127.0.0.1", gyration_server.server.port()));
  EXPECT_EQ(remote.declared_irreps.at("y"), IrrepLabel(1, -1));
  for (int t = 0; t < 3; ++t) {
    auto x = fixtures::random_cloud(rng, 5);
    const auto a_local = character_projection(local_f, "y", x, grid, 2);
    const auto a_remote = character_projection(remote, "y", x, grid, 2);
    for (const auto& [label, v] : a_local.projections) EXPECT_NEAR(a_remote.projections.at(label), v, 1e-12);
    EXPECT_NEAR(equivariance_error(remote, "y", IrrepLabel(1, 1), x, grid),
                equivariance_error(local_f, "y", IrrepLabel(1, 1), x, grid), 1e-12);
    EXPECT_LE(equivariance_error(remote_gyr, "y", IrrepLabel(0, 1), x, grid), 1e-8);
  }
}

TEST(Protocol, IdenticalRequestsGiveIdenticalBytes) {
  const auto t = read_transcript();
  std::vector<std::string> script = {t.client[0]};
  for (int id = 1; id <= 3; ++id) {
    auto doc = nlohmann::json::parse(t.client[1]);
    doc["id"] = id;
    script.push_back(doc.dump());
  }
  fixtures::ScriptChannel channel(script);
  auto echo = echo_probe(2);
  serve_session(echo, channel);
  ASSERT_EQ(channel.written.size(), 4u);
  auto payload = [](const std::string& s) { return s.substr(s.find("\"vectors\"")); };
  EXPECT_EQ(payload(channel.written[1]), payload(channel.written[2]));
  EXPECT_EQ(payload(channel.written[2]), payload(channel.written[3]));
}

TEST(Protocol, VersionMismatchIsRefused) {
  fixtures::ScriptChannel channel({R"({"protocol":"symprobe-probe","type":"hello","version":2})"});
  auto echo = echo_probe(1);
  EXPECT_FALSE(serve_session(echo, channel));
  ASSERT_EQ(channel.written.size(), 1u);
  EXPECT_NE(channel.written[0].find("version 2 is not supported"), std::string::npos);

  auto refusing = std::make_unique<fixtures::ScriptChannel>(std::vector<std::string>{channel.written[0]});
  try {
    RemoteProbe remote(std::move(refusing));
    FAIL();
  } catch (const ProtocolError& e) {
    EXPECT_NE(std::string(e.what()).find("connection refused"), std::string::npos);
  }
  auto newer = std::make_unique<fixtures::ScriptChannel>(std::vector<std::string>{
      R"({"protocol":"symprobe-probe","schema":{"y":1},"stateless":true,"type":"hello","version":9})"});
  EXPECT_THROW(RemoteProbe{std::move(newer)}, ProtocolError);
}

TEST(Protocol, SchemaChangeIsFatal) {
  auto channel = std::make_unique<fixtures::ScriptChannel>(std::vector<std::string>{
      R"({"protocol":"symprobe-probe","schema":{"y":2},"stateless":true,"type":"hello","version":1})",
      R"({"id":1,"type":"result","vectors":{"y":[1.0,2.0,3.0]}})",
      R"({"id":2,"type":"result","vectors":{"y":[1.0,2.0]}})"});
  RemoteProbe remote(std::move(channel));
  DecoratedPointCloud x(Positions::Zero(1, 3));
  EXPECT_THROW(remote.evaluate(x, {"y"}), ProtocolError);
  try {
    remote.evaluate(x, {"y"});
    FAIL();
  } catch (const ProtocolError& e) {
    EXPECT_NE(std::string(e.what()).find("closed"), std::string::npos);
  }
}

TEST(Protocol, ServerErrorsKeepSessionAlive) {
  auto channel = std::make_unique<fixtures::ScriptChannel>(std::vector<std::string>{
      R"({"protocol":"symprobe-probe","schema":{"y":1},"stateless":false,"type":"hello","version":1})",
      R"({"id":1,"message":"model failed","type":"error"})",
      R"({"id":2,"type":"result","vectors":{"y":[5.0]}})"});
  RemoteProbe remote(std::move(channel));
  EXPECT_FALSE(remote.stateless());
  DecoratedPointCloud x(Positions::Zero(1, 3));
  EXPECT_THROW(remote.evaluate(x, {"y"}), ProtocolError);
  EXPECT_EQ(remote.evaluate(x, {"y"}).at("y")(0), 5.0);
}

TEST(Protocol, MalformedRequests) {
  const auto t = read_transcript();
  fixtures::ScriptChannel channel({t.client[0], "[1,2]", R"({"type":"probe","id":"a","taps":["positions"]})",
                                   R"({"type":"probe","id":5,"taps":[]})", R"({"type":"dance","id":6})",
                                   R"({"type":"probe","id":7,"taps":["positions"],"cloud":{"positions":[[1,2]]}})"});
  auto echo = echo_probe(2);
  serve_session(echo, channel);
  ASSERT_EQ(channel.written.size(), 6u);
  for (size_t k = 1; k < 6; ++k) EXPECT_NE(channel.written[k].find("\"type\":\"error\""), std::string::npos) << k;
  EXPECT_NE(channel.written[3].find("\"id\":5"), std::string::npos);
  EXPECT_NE(channel.written[5].find("\"id\":7"), std::string::npos);
}

TEST(Protocol, CloudJsonRoundTrip) {
  std::mt19937_64 rng(42);
  auto x = fixtures::random_cloud(rng, 3);
  x.scalar_attrs["charge"] = Eigen::MatrixXd::Random(3, 2);
  x.vector_attrs["force"] = Positions::Random(3, 3);
  x.cell = Mat3::Identity() * 10.0;
  x.periodic = true;
  x.info["energy"] = -1.5;
  const auto back = cloud_from_json(nlohmann::json::parse(cloud_to_json(x).dump()));
  EXPECT_EQ(back.positions, x.positions);
  EXPECT_EQ(back.scalar_attrs.at("charge"), x.scalar_attrs.at("charge"));
  EXPECT_EQ(back.vector_attrs.at("force"), x.vector_attrs.at("force"));
  EXPECT_EQ(*back.cell, *x.cell);
  EXPECT_TRUE(back.periodic);
  EXPECT_EQ(back.info.at("energy"), -1.5);
  EXPECT_THROW(cloud_from_json(nlohmann::json::parse(R"({"positions":[[1,2,3]],"cell":[[1,0,0]]})")), ProtocolError);
}
