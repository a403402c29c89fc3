#include <random>

#include <Eigen/QR>
#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "symprobe/errors.hpp"
#include "symprobe/metrics.hpp"
#include "symprobe/purify.hpp"
#include "symprobe/quadrature.hpp"
#include "symprobe/targets.hpp"
#include "test_probes.hpp"

using namespace symprobe;

namespace {

Eigen::MatrixXd block_rho(const OutputBlocking& b, const GroupElement& g) {
  const Eigen::MatrixXd d = wigner_d(b.label, g).matrix;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(b.dim(), b.dim());
  for (int k = 0; k < b.blocks; ++k) out.block(k * d.rows(), k * d.rows(), d.rows(), d.rows()) = d;
  return out;
}

std::vector<ReadoutSample> random_samples(std::mt19937_64& rng, const O3Grid& grid, int count, int p, int k) {
  std::normal_distribution<double> normal;
  std::vector<ReadoutSample> out;
  for (int s = 0; s < count; ++s) {
    ReadoutSample r{Eigen::MatrixXd(grid.size(), p), Eigen::VectorXd(k)};
    for (Eigen::Index i = 0; i < r.features.size(); ++i) r.features.data()[i] = normal(rng);
    for (int j = 0; j < k; ++j) r.target(j) = normal(rng);
    out.push_back(std::move(r));
  }
  return out;
}

Eigen::MatrixXd random_theta(std::mt19937_64& rng, int p, int k) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd t(p, k);
  for (Eigen::Index i = 0; i < t.size(); ++i) t.data()[i] = normal(rng);
  return t;
}

// Loop-by-loop evaluation of both losses straight from their definitions.
std::pair<double, double> brute_losses(const Eigen::MatrixXd& theta, const std::vector<ReadoutSample>& samples,
                                       const O3Grid& grid, const OutputBlocking& b) {
  double mu = 0.0, sigma = 0.0;
  for (const auto& s : samples) {
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(b.dim());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const Eigen::MatrixXd rho = block_rho(b, grid.nodes()[i]);
      const Eigen::VectorXd out = theta.transpose() * s.features.row(Eigen::Index(i)).transpose();
      mu += grid.weights()[i] * (out - rho * s.target).squaredNorm();
      mean += grid.weights()[i] * rho.transpose() * out;
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const Eigen::MatrixXd rho = block_rho(b, grid.nodes()[i]);
      const Eigen::VectorXd out = theta.transpose() * s.features.row(Eigen::Index(i)).transpose();
      sigma += grid.weights()[i] * (out - rho * mean).squaredNorm();
    }
  }
  return {mu / double(samples.size()), sigma / double(samples.size())};
}

}  // namespace

TEST(Readout, LossesMatchBruteForce) {
  std::mt19937_64 rng(20);
  const auto grid = build_o3_grid(2);
  for (const OutputBlocking b : {OutputBlocking{IrrepLabel(1, 1), 1}, OutputBlocking{IrrepLabel(0, -1), 2},
                                 OutputBlocking{IrrepLabel(2, -1), 1}}) {
    const int p = 4;
    auto samples = random_samples(rng, grid, 3, p, b.dim());
    ReadoutAccumulator acc(grid, p, b);
    for (const auto& s : samples) acc.add(s);
    for (int t = 0; t < 3; ++t) {
      const auto theta = random_theta(rng, p, b.dim());
      const auto [mu, sigma] = brute_losses(theta, samples, grid, b);
      EXPECT_NEAR(acc.loss_mu(theta), mu, 1e-10 * std::max(1.0, mu)) << b.label.to_string();
      EXPECT_NEAR(acc.loss_sigma(theta), sigma, 1e-10 * std::max(1.0, sigma)) << b.label.to_string();
    }
  }
}

TEST(Readout, UnpenalizedSolveMatchesAugmentedLeastSquares) {
  std::mt19937_64 rng(21);
  const auto grid = build_o3_grid(2);
  const OutputBlocking b{IrrepLabel(1, 1), 1};
  const int p = 5, k = b.dim();
  auto samples = random_samples(rng, grid, 4, p, k);
  ReadoutAccumulator acc(grid, p, b);
  for (const auto& s : samples) acc.add(s);
  const double ridge = 1e-3;
  const auto solved = solve_readout(acc, 0.0, ridge);

  // Rows sqrt(w/S) (I (x) phi^T) with targets sqrt(w/S) rho y, plus ridge rows.
  const auto rows = Eigen::Index(samples.size() * grid.size() * size_t(k) + size_t(p * k));
  Eigen::MatrixXd design = Eigen::MatrixXd::Zero(rows, p * k);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(rows);
  Eigen::Index r = 0;
  for (const auto& s : samples) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double scale = std::sqrt(grid.weights()[i] / double(samples.size()));
      const Eigen::VectorXd target = block_rho(b, grid.nodes()[i]) * s.target;
      for (int j = 0; j < k; ++j, ++r) {
        design.block(r, j * p, 1, p) = scale * s.features.row(Eigen::Index(i));
        rhs(r) = scale * target(j);
      }
    }
  }
  for (int j = 0; j < p * k; ++j, ++r) design(r, j) = std::sqrt(ridge);
  const Eigen::VectorXd t = design.colPivHouseholderQr().solve(rhs);
  const Eigen::Map<const Eigen::VectorXd> got(solved.theta.data(), solved.theta.size());
  EXPECT_LT((got - t).norm(), 1e-9 * std::max(1.0, t.norm()));
}

TEST(Readout, StationaryPoint) {
  std::mt19937_64 rng(22);
  const auto grid = build_o3_grid(2);
  const OutputBlocking b{IrrepLabel(1, -1), 1};
  const int p = 4;
  ReadoutAccumulator acc(grid, p, b);
  for (const auto& s : random_samples(rng, grid, 5, p, b.dim())) acc.add(s);
  for (double gamma : default_gamma_ladder()) {
    const auto sol = solve_readout(acc, gamma);
    // Objective must not decrease along random perturbations.
    const double base = acc.loss_mu(sol.theta) + gamma * acc.loss_sigma(sol.theta) + sol.ridge * sol.theta.squaredNorm();
    for (int t = 0; t < 5; ++t) {
      const Eigen::MatrixXd delta = 1e-4 * random_theta(rng, p, b.dim());
      for (double sgn : {1.0, -1.0}) {
        const Eigen::MatrixXd th = sol.theta + sgn * delta;
        const double v = acc.loss_mu(th) + gamma * acc.loss_sigma(th) + sol.ridge * th.squaredNorm();
        EXPECT_GE(v, base - 1e-12 * std::max(1.0, base)) << gamma;
      }
    }
    EXPECT_GT(sol.min_eigenvalue, 0.0);
    EXPECT_GE(sol.max_eigenvalue, sol.min_eigenvalue);
  }
}

TEST(Readout, SumsAreAdditive) {
  std::mt19937_64 rng(23);
  const auto grid = build_o3_grid(2);
  const OutputBlocking b{IrrepLabel(1, 1), 1};
  auto samples = random_samples(rng, grid, 1, 3, 3);
  ReadoutAccumulator one(grid, 3, b), two(grid, 3, b), merged(grid, 3, b);
  one.add(samples[0]);
  two.add(samples[0]);
  two.add(samples[0]);
  merged.merge(one);
  merged.merge(one);
  EXPECT_LT((two.gram() - one.gram()).norm(), 1e-14);
  EXPECT_LT((two.mean_projector() - one.mean_projector()).norm(), 1e-14);
  EXPECT_EQ(two.count(), 2);
  auto round = ReadoutAccumulator::from_json(nlohmann::json::parse(merged.to_json().dump()));
  EXPECT_EQ(round.count(), 2);
  EXPECT_LT((round.cross() - two.cross()).norm(), 1e-14);
  EXPECT_THROW(round.add(samples[0]), InvalidArgument);
  ReadoutAccumulator fresh(grid, 3, b);
  fresh.merge(round);
  EXPECT_EQ(fresh.count(), 2);
}

TEST(Readout, Errors) {
  const auto grid = build_o3_grid(2);
  const auto other = build_o3_grid(3);
  const OutputBlocking b{IrrepLabel(1, 1), 1};
  ReadoutAccumulator acc(grid, 3, b);
  EXPECT_THROW(solve_readout(acc, 1.0), InvalidArgument);
  EXPECT_THROW(acc.loss_mu(Eigen::MatrixXd::Zero(3, 3)), InvalidArgument);
  ReadoutAccumulator acc3(other, 3, b);
  EXPECT_THROW(acc.merge(acc3), InvalidArgument);
  EXPECT_THROW(acc.add({Eigen::MatrixXd::Zero(other.size(), 3), Eigen::VectorXd::Zero(3)}), InvalidArgument);
  EXPECT_THROW(acc.add({Eigen::MatrixXd::Zero(grid.size(), 2), Eigen::VectorXd::Zero(3)}), InvalidArgument);
  EXPECT_THROW(acc.add({Eigen::MatrixXd::Zero(grid.size(), 3), Eigen::VectorXd::Zero(2)}), InvalidArgument);
  EXPECT_THROW(ReadoutAccumulator(build_so3_grid(2), 3, b), InvalidArgument);
  acc.add({Eigen::MatrixXd::Ones(grid.size(), 3), Eigen::VectorXd::Ones(3)});
  EXPECT_THROW(solve_readout(acc, -1.0), InvalidArgument);
}

TEST(Readout, ExactlyEquivariantFeaturesAreRecovered) {
  std::mt19937_64 rng(24);
  std::normal_distribution<double> normal;
  const auto grid = build_o3_grid(2);
  const OutputBlocking b{IrrepLabel(1, 1), 1};
  // Three exact vector blocks; theta* acts on each as a scalar multiple of identity.
  FunctionProbe features("llf", 9, [](const DecoratedPointCloud& x) {
    Eigen::VectorXd phi(9);
    for (int order = 0; order < 3; ++order) phi.segment(3 * order, 3) = oracle_value(IrrepLabel(1, 1), order, x);
    return phi;
  });
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(9, 3);
  for (int order = 0; order < 3; ++order) expected.block(3 * order, 0, 3, 3) = normal(rng) * Eigen::Matrix3d::Identity();
  std::vector<DecoratedPointCloud> clouds;
  std::vector<Eigen::VectorXd> targets;
  for (int s = 0; s < 8; ++s) {
    clouds.push_back(fixtures::random_cloud(rng, 5, 0.6));
    targets.push_back(expected.transpose() * features.evaluate(clouds.back(), {"llf"}).at("llf"));
  }
  const auto samples = collect_samples(features, "llf", clouds, targets, grid);
  ReadoutAccumulator acc(grid, 9, b);
  for (const auto& s : samples) acc.add(s);
  for (double gamma : default_gamma_ladder()) {
    const auto sol = solve_readout(acc, gamma, 0.0);
    const auto [mu, sigma] = brute_losses(sol.theta, samples, grid, b);
    EXPECT_LE(mu, 1e-18) << gamma;
    EXPECT_LE(sigma, 1e-18) << gamma;
    EXPECT_LT((sol.theta - expected).norm(), 1e-8) << gamma;
  }
}

TEST(Readout, LadderIsMonotone) {
  auto fx = contaminated_fixture({.count = 20});
  const auto grid = build_o3_grid(2);
  ReadoutAccumulator acc(grid, 6, fx.blocking);
  for (const auto& s : collect_samples(fx.features, "llf", fx.clouds, fx.targets, grid)) acc.add(s);
  double prev_sigma = std::numeric_limits<double>::infinity();
  double prev_mu = -1.0;
  for (double gamma : default_gamma_ladder()) {
    const auto sol = solve_readout(acc, gamma);
    EXPECT_GE(sol.achieved_L_sigma, -1e-10);
    EXPECT_LE(sol.achieved_L_sigma, prev_sigma * (1 + 1e-9) + 1e-14) << gamma;
    EXPECT_GE(sol.achieved_L_mu, prev_mu * (1 - 1e-9)) << gamma;
    prev_sigma = sol.achieved_L_sigma;
    prev_mu = sol.achieved_L_mu;
  }
}

TEST(Readout, TradeoffAgreesWithProbeMetric) {
  auto fx = contaminated_fixture({.count = 12, .seed = 3});
  const auto grid = build_o3_grid(2);
  auto samples = collect_samples(fx.features, "llf", fx.clouds, fx.targets, grid);
  ReadoutAccumulator acc(grid, 6, fx.blocking);
  for (const auto& s : samples) acc.add(s);
  const auto sol = solve_readout(acc, 0.0);
  const auto rows = evaluate_tradeoff({sol}, samples, grid, fx.blocking);
  ASSERT_EQ(rows.size(), 1u);

  const Eigen::MatrixXd theta = sol.theta;
  ProbeFunction& feat = fx.features;
  FunctionProbe composed("out", 3, [&feat, theta](const DecoratedPointCloud& x) {
    return Eigen::VectorXd(theta.transpose() * feat.evaluate(x, {"llf"}).at("llf"));
  });
  double a = 0.0;
  for (const auto& x : fx.clouds) a += equivariance_error(composed, "out", IrrepLabel(1, 1), x, grid);
  a /= double(fx.clouds.size());
  EXPECT_NEAR(rows[0].equivariance_error, a, 1e-10 * std::max(1.0, a));
  EXPECT_NEAR(rows[0].rmse, std::sqrt(sol.achieved_L_mu / 3.0), 1e-10);
  EXPECT_EQ(tradeoff_csv(rows).rfind("gamma,rmse,equivariance_error,train_L_sigma\n0.0,", 0), 0u);
}

TEST(Readout, PurificationTradesLittleAccuracyForEquivariance) {
  const auto grid = build_o3_grid(2);
  for (std::uint64_t seed : {7u, 21u, 33u, 45u, 57u, 69u}) {
    auto fx = contaminated_fixture({.seed = seed});
    auto train = collect_samples(fx.features, "llf", fx.clouds, fx.targets, grid);
    auto heldout_fx = contaminated_fixture({.seed = seed + 1});
    auto heldout = collect_samples(heldout_fx.features, "llf", heldout_fx.clouds, heldout_fx.targets, grid);
    ReadoutAccumulator acc(grid, 6, fx.blocking);
    for (const auto& s : train) acc.add(s);
    std::vector<PurifiedReadout> ladder;
    for (double gamma : default_gamma_ladder()) ladder.push_back(solve_readout(acc, gamma));
    const auto rows = evaluate_tradeoff(ladder, heldout, grid, fx.blocking);
    const auto& base = rows.front();
    bool found = false;
    for (const auto& r : rows) {
      if (r.gamma > 0 && r.equivariance_error <= 0.5 * base.equivariance_error && r.rmse <= 1.01 * base.rmse) found = true;
    }
    EXPECT_TRUE(found) << "seed " << seed << "\n" << tradeoff_csv(rows);
  }
}

TEST(Readout, JsonRoundTrip) {
  std::mt19937_64 rng(25);
  const auto grid = build_o3_grid(2);
  ReadoutAccumulator acc(grid, 2, {IrrepLabel(0, 1), 1});
  for (const auto& s : random_samples(rng, grid, 2, 2, 1)) acc.add(s);
  const auto sol = solve_readout(acc, 1.0);
  const auto back = PurifiedReadout::from_json(nlohmann::json::parse(sol.to_json().dump()));
  EXPECT_EQ(back.theta, sol.theta);
  EXPECT_EQ(back.gamma, 1.0);
  EXPECT_EQ(back.achieved_L_sigma, sol.achieved_L_sigma);
}
