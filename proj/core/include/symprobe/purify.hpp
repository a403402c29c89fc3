#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json_fwd.hpp>

#include "symprobe/o3.hpp"
#include "symprobe/pointcloud.hpp"
#include "symprobe/probe.hpp"
#include "symprobe/quadrature.hpp"

namespace symprobe {

/// One training structure: last-layer features on every grid node (row i is
/// phi(g_i x)) and the target y(x) in the reference frame.
struct ReadoutSample {
  Eigen::MatrixXd features;
  Eigen::VectorXd target;
};

/// Output layout: `blocks` consecutive copies of irrep `label`.
struct OutputBlocking {
  IrrepLabel label{0, 1};
  int blocks = 1;
  int dim() const { return blocks * label.dim(); }
};

/// Moments of the readout losses as quadratics in t = vec(theta), theta being
/// feature_dim x output_dim (column-major, index p + P j):
///   L_mu(t)    = t^T (I (x) G) t - 2 t^T c + <|y|^2>
///   L_sigma(t) = t^T (I (x) G - H) t
/// G = <phi phi^T>, c = <vec(phi (rho y)^T)>, H = <Mbar^T Mbar> with
/// Mbar = sum_g w_g rho(g)^T (x) phi(g x)^T. All moments are sums; merge() adds them.
class ReadoutAccumulator {
 public:
  ReadoutAccumulator(const O3Grid& grid, int feature_dim, OutputBlocking blocking);

  void add(const ReadoutSample& sample);
  /// Throws InvalidArgument unless shapes and grids match.
  void merge(const ReadoutAccumulator& other);

  long count() const { return count_; }
  int feature_dim() const { return feature_dim_; }
  const OutputBlocking& blocking() const { return blocking_; }
  std::uint64_t grid_fingerprint() const { return fingerprint_; }

  // Means over samples.
  Eigen::MatrixXd gram() const;
  Eigen::MatrixXd mean_projector() const;
  Eigen::VectorXd cross() const;
  double target_norm() const;

  /// Quadratic-form loss values for a given theta (feature_dim x output_dim).
  double loss_mu(const Eigen::MatrixXd& theta) const;
  double loss_sigma(const Eigen::MatrixXd& theta) const;

  nlohmann::json to_json() const;
  static ReadoutAccumulator from_json(const nlohmann::json& doc);

 private:
  ReadoutAccumulator() = default;
  void require_samples() const;

  // Per-node weights and blockwise rho; empty after deserialization, so add() is
  // only available on accumulators built from a grid (merge works either way).
  std::vector<double> weights_;
  std::vector<Eigen::MatrixXd> rho_;
  std::uint64_t fingerprint_ = 0;
  int feature_dim_ = 0;
  OutputBlocking blocking_;
  long count_ = 0;
  Eigen::MatrixXd gram_sum_;
  Eigen::MatrixXd projector_sum_;
  Eigen::VectorXd cross_sum_;
  double target_sum_ = 0.0;
};

struct PurifiedReadout {
  Eigen::MatrixXd theta;  // feature_dim x output_dim
  double gamma = 0.0;
  double ridge = 0.0;
  double achieved_L_mu = 0.0;
  double achieved_L_sigma = 0.0;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;

  nlohmann::json to_json() const;
  static PurifiedReadout from_json(const nlohmann::json& doc);
};

/// Default ridge: 1e-10 times the mean diagonal of the normal matrix.
constexpr double kDefaultRidgeScale = 1e-10;

/// Minimizes L_mu + gamma L_sigma + ridge |theta|^2 with a Cholesky solve.
/// ridge < 0 selects the default. Throws NumericalInconsistency when I (x) G - H
/// is indefinite beyond -1e-8 relative, InvalidArgument for an empty accumulator.
PurifiedReadout solve_readout(const ReadoutAccumulator& acc, double gamma, double ridge = -1.0);

/// Readout outputs theta^T phi on every node of one sample, as orbit samples.
Eigen::MatrixXd readout_orbit(const Eigen::MatrixXd& theta, const ReadoutSample& sample);

struct TradeoffRow {
  double gamma;
  double rmse;  // sqrt(mean L_mu / output_dim) on held-out data
  double equivariance_error;  // mean A_alpha over held-out samples
  double train_L_sigma;
};

std::vector<TradeoffRow> evaluate_tradeoff(const std::vector<PurifiedReadout>& ladder,
                                           const std::vector<ReadoutSample>& heldout, const O3Grid& grid,
                                           const OutputBlocking& blocking);
std::string tradeoff_csv(const std::vector<TradeoffRow>& rows);

/// Evaluates `tap` of f on the grid orbit of every cloud.
std::vector<ReadoutSample> collect_samples(ProbeFunction& f, const std::string& tap,
                                           const std::vector<DecoratedPointCloud>& clouds,
                                           const std::vector<Eigen::VectorXd>& targets, const O3Grid& grid,
                                           int threads = 1);

/// Synthetic readout problem whose last-layer features carry a separable
/// non-equivariant contamination: phi = [u, u' + eta n], y = u + beta u' + xi,
/// where u, u' are exact (1,+1) vectors, n is a sum of componentwise squares
/// (no vector content) and xi an unpredictable per-sample vector.
struct ContaminatedFixture {
  FunctionProbe features;  // tap "llf", dimension 6
  std::vector<DecoratedPointCloud> clouds;
  std::vector<Eigen::VectorXd> targets;
  OutputBlocking blocking;
};

struct ContaminatedFixtureSpec {
  int count = 60;
  std::uint64_t seed = 7;
  double eta = 0.3;
  double beta = 0.03;
  double noise = 3.0;
};

ContaminatedFixture contaminated_fixture(const ContaminatedFixtureSpec& spec = {});

/// The default gamma ladder.
std::vector<double> default_gamma_ladder();

}  // namespace symprobe
