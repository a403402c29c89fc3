#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "symprobe/errors.hpp"
#include "symprobe/metrics.hpp"
#include "symprobe/quadrature.hpp"
#include "symprobe/targets.hpp"
#include "symprobe/toy.hpp"
#include "test_probes.hpp"

using namespace symprobe;

namespace {

DecoratedPointCloud cloud_with_species(std::mt19937_64& rng, int n) {
  auto x = fixtures::random_cloud(rng, n);
  const int z[] = {6, 1, 8, 1, 6, 8, 1};
  x.scalar_attrs["species"].resize(n, 1);
  for (int i = 0; i < n; ++i) x.scalar_attrs["species"](i, 0) = z[i % 7];
  return x;
}

ToyNetConfig small_config(GeometryEmbedding e, Pooling p, int depth) {
  ToyNetConfig c;
  c.embedding = e;
  c.lambda_max_emb = 3;
  c.hidden_width = 8;
  c.depth = depth;
  c.pooling = p;
  c.species = {1, 6, 8};
  c.species_width = 3;
  c.heads = {{"e", IrrepLabel(0, 1), 1}, {"v", IrrepLabel(1, 1), 1}};
  c.seed = 5;
  return c;
}

std::vector<LabeledCloud> gyration_set(int count, std::uint64_t seed) {
  ConformerSpec spec;
  spec.count = count;
  spec.seed = seed;
  spec.rattle_sigma = 0.15;
  std::vector<LabeledCloud> out;
  for (auto& c : rattled_conformers(spec)) {
    const double y = c.cloud.centered().squaredNorm();
    out.push_back({std::move(c.cloud), {{"y", Eigen::VectorXd::Constant(1, y)}}});
  }
  return out;
}

}  // namespace

class ToyGradient : public ::testing::TestWithParam<std::tuple<GeometryEmbedding, Pooling, int, bool>> {};

TEST_P(ToyGradient, MatchesCentralDifferences) {
  const auto [embedding, pooling, depth, scalar_only] = GetParam();
  auto config = small_config(embedding, pooling, depth);
  config.scalar_only = scalar_only;
  ToyNet net(config);
  net.set_output_scaling("e", 1.7, Eigen::VectorXd::Constant(1, 0.3));
  std::mt19937_64 rng(31);
  const auto x = cloud_with_species(rng, 4);
  const std::map<std::string, Eigen::VectorXd> targets{{"e", Eigen::VectorXd::Constant(1, 0.4)},
                                                       {"v", Eigen::Vector3d(0.1, -0.2, 0.5)}};
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(net.parameters().size());
  net.loss_and_gradient(x, targets, &grad);

  const double h = 1e-6;
  Eigen::VectorXd fd(grad.size());
  for (Eigen::Index k = 0; k < grad.size(); ++k) {
    const double saved = net.parameters()(k);
    net.parameters()(k) = saved + h;
    const double up = net.loss_and_gradient(x, targets, nullptr);
    net.parameters()(k) = saved - h;
    const double down = net.loss_and_gradient(x, targets, nullptr);
    net.parameters()(k) = saved;
    fd(k) = (up - down) / (2 * h);
  }
  for (const auto& g : net.parameter_groups()) {
    const auto a = grad.segment(g.offset, g.size);
    const auto b = fd.segment(g.offset, g.size);
    EXPECT_GT(b.norm(), 1e-8) << g.name;
    EXPECT_LE((a - b).norm(), 1e-5 * b.norm()) << g.name;
  }
}

INSTANTIATE_TEST_SUITE_P(Layers, ToyGradient,
                         ::testing::Values(std::make_tuple(GeometryEmbedding::distance_vector, Pooling::sum, 1, false),
                                           std::make_tuple(GeometryEmbedding::distance_vector, Pooling::attention, 2, false),
                                           std::make_tuple(GeometryEmbedding::ssh, Pooling::sum, 2, false),
                                           std::make_tuple(GeometryEmbedding::ssh, Pooling::attention, 1, false),
                                           std::make_tuple(GeometryEmbedding::distance_vector, Pooling::sum, 1, true),
                                           std::make_tuple(GeometryEmbedding::ssh, Pooling::attention, 1, true)));

TEST(ToyNet, PermutationInvariant) {
  std::mt19937_64 rng(32);
  const auto x = cloud_with_species(rng, 5);
  for (auto pooling : {Pooling::sum, Pooling::attention}) {
    ToyNet net(small_config(GeometryEmbedding::ssh, pooling, 2));
    auto y = x;
    const int perm[] = {3, 0, 4, 1, 2};
    for (int i = 0; i < 5; ++i) {
      y.positions.row(i) = x.positions.row(perm[i]);
      y.scalar_attrs["species"](i, 0) = x.scalar_attrs.at("species")(perm[i], 0);
    }
    const auto a = net.forward(x, false).heads;
    const auto b = net.forward(y, false).heads;
    for (const auto& [name, v] : a) EXPECT_LT((v - b.at(name)).cwiseAbs().maxCoeff(), 1e-12) << name;
  }
}

TEST(ToyNet, TapsMatchSchema) {
  std::mt19937_64 rng(33);
  const auto x = cloud_with_species(rng, 4);
  ToyNet net(small_config(GeometryEmbedding::ssh, Pooling::attention, 1));
  const auto out = net.forward(x);
  const auto schema = net.schema(4);
  ASSERT_EQ(out.taps.size(), schema.size());
  for (const auto& [tap, dim] : schema) EXPECT_EQ(out.taps.at(tap).size(), dim) << tap;
  EXPECT_EQ(schema.at("geometry"), 12 * 16);
  EXPECT_EQ(out.taps.at("v"), out.heads.at("v"));
}

TEST(ToyNet, SinglePointCloud) {
  DecoratedPointCloud x(Positions::Zero(1, 3));
  x.scalar_attrs["species"] = Eigen::MatrixXd::Constant(1, 1, 6);
  ToyNet net(small_config(GeometryEmbedding::distance_vector, Pooling::attention, 1));
  EXPECT_TRUE(net.forward(x).heads.at("e").allFinite());
}

TEST(ToyNet, Errors) {
  ToyNet net(small_config(GeometryEmbedding::distance_vector, Pooling::sum, 1));
  EXPECT_THROW(net.forward(DecoratedPointCloud(Positions(0, 3))), InvalidArgument);
  DecoratedPointCloud x(Positions::Zero(2, 3));
  EXPECT_THROW(net.forward(x), InvalidArgument);  // no species
  x.scalar_attrs["species"] = Eigen::MatrixXd::Constant(2, 1, 17);
  EXPECT_THROW(net.forward(x), InvalidArgument);  // unknown species
  EXPECT_THROW(net.set_output_scaling("v", 1.0, Eigen::VectorXd::Ones(3)), InvalidArgument);
  EXPECT_THROW(net.set_output_scaling("missing", 1.0, Eigen::VectorXd::Ones(1)), InvalidArgument);
  auto bad = small_config(GeometryEmbedding::ssh, Pooling::sum, 1);
  bad.lambda_max_emb = 0;
  EXPECT_THROW(ToyNet{bad}, InvalidArgument);
  bad = small_config(GeometryEmbedding::ssh, Pooling::sum, 0);
  EXPECT_THROW(ToyNet{bad}, InvalidArgument);
  bad = small_config(GeometryEmbedding::ssh, Pooling::sum, 1);
  bad.heads.push_back({"pooled", IrrepLabel(0, 1), 1});
  EXPECT_THROW(ToyNet{bad}, InvalidArgument);
}

TEST(ToyNet, DistanceVectorGeometryIsScalarPlusVector) {
  std::mt19937_64 rng(34);
  const auto grid = build_o3_grid(2);
  ToyNetConfig config;
  ToyNet net(config);
  DecoratedPointCloud x(Positions(2, 3));
  x.positions << 0.1, -0.3, 0.2, 0.9, 0.5, -0.4;
  ToyNetProbe probe(net, 2);
  const auto report = character_projection(probe, "geometry", x, grid, 2);
  double low = 0.0;
  for (const auto& [label, v] : report.normalized) {
    if (label.lambda() <= 1 && label.sigma() == 1) {
      low += v;
    } else {
      EXPECT_LE(v, 1e-9) << label.to_string();
    }
  }
  EXPECT_NEAR(low, 1.0, 1e-9);
  EXPECT_GT(report.normalized.at(IrrepLabel(0, 1)), 0.1);
  EXPECT_GT(report.normalized.at(IrrepLabel(1, 1)), 0.1);
}

TEST(ToyNet, SshGeometryCarriesTopOrder) {
  const auto grid = build_o3_grid(4);
  ToyNetConfig config;
  config.embedding = GeometryEmbedding::ssh;
  config.lambda_max_emb = 4;
  ToyNet net(config);
  DecoratedPointCloud x(Positions(2, 3));
  x.positions << 0.1, -0.3, 0.2, 0.9, 0.5, -0.4;
  ToyNetProbe probe(net, 2);
  const auto report = character_projection(probe, "geometry", x, grid, 4);
  EXPECT_GT(report.normalized.at(IrrepLabel(4, 1)), 0.01);
}

TEST(ToyNet, SshGeometryBlocksAreCovariant) {
  std::mt19937_64 rng(35);
  ToyNetConfig config;
  config.embedding = GeometryEmbedding::ssh;
  config.lambda_max_emb = 4;
  ToyNet net(config);
  const auto x = fixtures::random_cloud(rng, 3);
  const int dim = 25;
  for (int t = 0; t < 10; ++t) {
    const auto g = random_group_element(rng, true);
    const auto a = net.forward(x).taps.at("geometry");
    const auto b = net.forward(act(g, x)).taps.at("geometry");
    for (int e = 0; e < 6; ++e) {
      for (int l = 0; l <= 4; ++l) {
        const Eigen::VectorXd expect = wigner_d(IrrepLabel(l, 1), g).matrix * a.segment(e * dim + l * l, 2 * l + 1);
        EXPECT_LT((b.segment(e * dim + l * l, 2 * l + 1) - expect).norm(), 1e-10 * std::max(1.0, expect.norm()));
      }
    }
  }
}

TEST(ToyNet, CheckpointRoundTrip) {
  std::mt19937_64 rng(36);
  auto net = ToyNet(small_config(GeometryEmbedding::ssh, Pooling::attention, 2));
  net.set_output_scaling("e", 2.5, Eigen::VectorXd::Constant(1, -1.0));
  const auto dir = std::filesystem::temp_directory_path() / "symprobe_toy_checkpoint";
  std::filesystem::create_directories(dir);
  save_checkpoint(net, dir / "model.json");
  EXPECT_EQ(std::filesystem::file_size(dir / "model.bin"), std::uintmax_t(net.parameters().size() * 8));
  const auto back = load_checkpoint(dir / "model.json");
  EXPECT_EQ(back.parameters(), net.parameters());
  const auto x = cloud_with_species(rng, 4);
  EXPECT_EQ(back.forward(x).heads.at("e"), net.forward(x).heads.at("e"));
  std::filesystem::resize_file(dir / "model.bin", 16);
  EXPECT_THROW(load_checkpoint(dir / "model.json"), InvalidArgument);
  std::filesystem::remove_all(dir);
}

TEST(ToyTraining, DeterministicAndDecreasing) {
  const auto data = gyration_set(40, 1);
  const std::vector<LabeledCloud> train_set(data.begin(), data.begin() + 32), val_set(data.begin() + 32, data.end());
  ToyNetConfig config;
  config.hidden_width = 16;
  TrainConfig tc;
  tc.epochs = 6;
  tc.batch_size = 8;
  ToyNet a(config), b(config);
  const auto ra = train(a, train_set, val_set, tc);
  const auto rb = train(b, train_set, val_set, tc);
  ASSERT_EQ(ra.log.size(), 6u);
  for (size_t k = 0; k < ra.log.size(); ++k) EXPECT_EQ(ra.log[k].train_loss, rb.log[k].train_loss);
  EXPECT_EQ(a.parameters(), b.parameters());
  EXPECT_LT(ra.log.back().train_loss, ra.log.front().train_loss);
  EXPECT_EQ(ra.log_csv().substr(0, 30), "epoch,train_loss,val_rmse:y\n1,");
}

TEST(ToyTraining, SnapshotsFillHeatmap) {
  const auto data = gyration_set(12, 2);
  ToyNetConfig config;
  config.hidden_width = 8;
  config.depth = 1;
  TrainConfig tc;
  tc.epochs = 2;
  tc.snapshot_stride = 1;
  tc.snapshot_clouds = 2;
  ToyNet net(config);
  const auto result = train(net, data, {}, tc);
  ASSERT_EQ(result.snapshots.size(), 3u);
  EXPECT_EQ(result.snapshots[0].epoch, HeatmapTable::kUntrained);
  EXPECT_EQ(result.heatmap.epochs("pooled"), (std::vector<int>{HeatmapTable::kUntrained, 1, 2}));
  EXPECT_EQ(result.heatmap.count("geometry", 2), 2);
  EXPECT_NEAR(result.heatmap.value("geometry", 1, IrrepLabel(0, 1)) + result.heatmap.value("geometry", 1, IrrepLabel(1, 1)),
              1.0, 1e-9);
  EXPECT_GE(result.snapshots[1].median_equivariance_error.at("y"), 0.0);
}

TEST(ToyTraining, DivergenceReportsEpoch) {
  auto data = gyration_set(4, 3);
  data[2].targets["y"](0) = std::numeric_limits<double>::quiet_NaN();
  ToyNetConfig config;
  config.hidden_width = 4;
  TrainConfig tc;
  tc.epochs = 3;
  tc.fit_output_scaling = false;
  ToyNet net(config);
  try {
    train(net, data, {}, tc);
    FAIL() << "expected divergence";
  } catch (const NumericalInconsistency& e) {
    EXPECT_NE(std::string(e.what()).find("epoch 1"), std::string::npos) << e.what();
  }
}

TEST(ToyTraining, ScalarOnlyCannotLearnPseudoscalar) {
  ConformerSpec spec;
  spec.count = 160;
  spec.rattle_sigma = 0.1;
  spec.random_parity = true;
  std::vector<LabeledCloud> data;
  for (auto& c : rattled_conformers(spec)) data.push_back({std::move(c.cloud), {{"Q", Eigen::VectorXd::Constant(1, c.q)}}});
  const std::vector<LabeledCloud> train_set(data.begin(), data.begin() + 120), val_set(data.begin() + 120, data.end());
  double mean = 0.0, sq = 0.0;
  for (const auto& s : val_set) mean += s.targets.at("Q")(0) / double(val_set.size());
  for (const auto& s : val_set) sq += std::pow(s.targets.at("Q")(0) - mean, 2) / double(val_set.size());
  const double std_q = std::sqrt(sq);

  ToyNetConfig config;
  config.scalar_only = true;
  config.hidden_width = 16;
  config.heads = {{"Q", IrrepLabel(0, -1), 1}};
  config.species = {1, 6, 9, 17, 35};
  TrainConfig tc;
  tc.epochs = 15;
  tc.augmentation = Augmentation::rotations;
  ToyNet net(config);
  const auto result = train(net, train_set, val_set, tc);
  for (const auto& e : result.log) EXPECT_GE(e.val_rmse.at("Q"), 0.99 * std_q) << e.epoch;
}
