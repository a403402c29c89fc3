#include "symprobe/purify.hpp"

#include <cmath>
#include <random>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "symprobe/errors.hpp"
#include "symprobe/json_io.hpp"
#include "symprobe/metrics.hpp"
#include "symprobe/targets.hpp"

namespace symprobe {

namespace {

Eigen::MatrixXd block_rho(const OutputBlocking& b, const GroupElement& g) {
  const Eigen::MatrixXd d = wigner_d(b.label, g).matrix;
  const int n = d.rows();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(b.dim(), b.dim());
  for (int k = 0; k < b.blocks; ++k) out.block(k * n, k * n, n, n) = d;
  return out;
}

nlohmann::json matrix_json(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& j) {
  const auto rows = Eigen::Index(j.size());
  const auto cols = rows ? Eigen::Index(j.at(0).size()) : 0;
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (Eigen::Index(j.at(size_t(r)).size()) != cols) throw InvalidArgument("ragged matrix in JSON");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = j.at(size_t(r)).at(size_t(c)).get<double>();
  }
  return m;
}

Eigen::VectorXd vec(const Eigen::MatrixXd& theta) { return Eigen::Map<const Eigen::VectorXd>(theta.data(), theta.size()); }

// I_K (x) G applied to t without forming the Kronecker product.
Eigen::VectorXd kron_identity_times(const Eigen::MatrixXd& g, const Eigen::VectorXd& t, int k) {
  const Eigen::Index p = g.rows();
  Eigen::VectorXd out(t.size());
  Eigen::Map<const Eigen::MatrixXd> tm(t.data(), p, k);
  Eigen::Map<Eigen::MatrixXd>(out.data(), p, k) = g * tm;
  return out;
}

}  // namespace

ReadoutAccumulator::ReadoutAccumulator(const O3Grid& grid, int feature_dim, OutputBlocking blocking)
    : weights_(grid.weights()), fingerprint_(grid.fingerprint()), feature_dim_(feature_dim), blocking_(blocking) {
  if (feature_dim < 1) throw InvalidArgument("feature dimension must be >= 1");
  if (blocking.blocks < 1) throw InvalidArgument("output block count must be >= 1");
  if (!grid.covers_parity()) throw InvalidArgument("readout purification needs an O(3) grid");
  for (const auto& g : grid.nodes()) rho_.push_back(block_rho(blocking_, g));
  const int pk = feature_dim_ * blocking_.dim();
  gram_sum_ = Eigen::MatrixXd::Zero(feature_dim_, feature_dim_);
  projector_sum_ = Eigen::MatrixXd::Zero(pk, pk);
  cross_sum_ = Eigen::VectorXd::Zero(pk);
}

void ReadoutAccumulator::add(const ReadoutSample& sample) {
  if (rho_.empty()) throw InvalidArgument("accumulator has no grid attached; merge it into one built from a grid");
  const auto n = Eigen::Index(rho_.size());
  const int k = blocking_.dim();
  if (sample.features.rows() != n) {
    throw InvalidArgument(fmt::format("sample has features on {} nodes, grid has {}", sample.features.rows(), n));
  }
  if (sample.features.cols() != feature_dim_) {
    throw InvalidArgument(fmt::format("sample feature dimension {} != {}", sample.features.cols(), feature_dim_));
  }
  if (sample.target.size() != k) {
    throw InvalidArgument(fmt::format("sample target dimension {} != {}", sample.target.size(), k));
  }
  Eigen::MatrixXd mbar = Eigen::MatrixXd::Zero(k, feature_dim_ * k);
  Eigen::MatrixXd cross = Eigen::MatrixXd::Zero(feature_dim_, k);
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(feature_dim_, feature_dim_);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double w = weights_[size_t(i)];
    const Eigen::RowVectorXd phi = sample.features.row(i);
    const Eigen::MatrixXd& rho = rho_[size_t(i)];
    gram.noalias() += w * phi.transpose() * phi;
    cross.noalias() += w * phi.transpose() * (rho * sample.target).transpose();
    // rho^T (x) phi^T: column block j of width P is rho(j, :)^T phi.
    for (int j = 0; j < k; ++j) mbar.middleCols(j * feature_dim_, feature_dim_).noalias() += w * rho.row(j).transpose() * phi;
  }
  gram_sum_ += gram;
  projector_sum_.noalias() += mbar.transpose() * mbar;
  cross_sum_ += vec(cross);
  target_sum_ += sample.target.squaredNorm();
  ++count_;
}

void ReadoutAccumulator::merge(const ReadoutAccumulator& other) {
  if (other.feature_dim_ != feature_dim_ || other.blocking_.dim() != blocking_.dim() ||
      other.blocking_.label != blocking_.label) {
    throw InvalidArgument("cannot merge accumulators with different shapes");
  }
  if (other.fingerprint_ != fingerprint_) throw InvalidArgument("cannot merge accumulators built on different grids");
  gram_sum_ += other.gram_sum_;
  projector_sum_ += other.projector_sum_;
  cross_sum_ += other.cross_sum_;
  target_sum_ += other.target_sum_;
  count_ += other.count_;
}

void ReadoutAccumulator::require_samples() const {
  if (count_ == 0) throw InvalidArgument("no samples accumulated; the readout problem is underdetermined");
}

Eigen::MatrixXd ReadoutAccumulator::gram() const {
  require_samples();
  return gram_sum_ / double(count_);
}

Eigen::MatrixXd ReadoutAccumulator::mean_projector() const {
  require_samples();
  return projector_sum_ / double(count_);
}

Eigen::VectorXd ReadoutAccumulator::cross() const {
  require_samples();
  return cross_sum_ / double(count_);
}

double ReadoutAccumulator::target_norm() const {
  require_samples();
  return target_sum_ / double(count_);
}

double ReadoutAccumulator::loss_mu(const Eigen::MatrixXd& theta) const {
  const Eigen::VectorXd t = vec(theta);
  return t.dot(kron_identity_times(gram(), t, blocking_.dim())) - 2.0 * t.dot(cross()) + target_norm();
}

double ReadoutAccumulator::loss_sigma(const Eigen::MatrixXd& theta) const {
  const Eigen::VectorXd t = vec(theta);
  return t.dot(kron_identity_times(gram(), t, blocking_.dim())) - t.dot(mean_projector() * t);
}

nlohmann::json ReadoutAccumulator::to_json() const {
  return {{"format", "symprobe.readout_accumulator"},
          {"version", 1},
          {"feature_dim", feature_dim_},
          {"lambda", blocking_.label.lambda()},
          {"sigma", blocking_.label.sigma()},
          {"blocks", blocking_.blocks},
          {"count", count_},
          {"grid_fingerprint", fingerprint_},
          {"gram_sum", matrix_json(gram_sum_)},
          {"projector_sum", matrix_json(projector_sum_)},
          {"cross_sum", matrix_json(cross_sum_)},
          {"target_sum", target_sum_}};
}

ReadoutAccumulator ReadoutAccumulator::from_json(const nlohmann::json& doc) {
  if (doc.value("format", "") != "symprobe.readout_accumulator") throw InvalidArgument("not a readout accumulator");
  ReadoutAccumulator acc;
  acc.feature_dim_ = doc.at("feature_dim").get<int>();
  acc.blocking_ = {IrrepLabel(doc.at("lambda").get<int>(), doc.at("sigma").get<int>()), doc.at("blocks").get<int>()};
  acc.count_ = doc.at("count").get<long>();
  acc.fingerprint_ = doc.at("grid_fingerprint").get<std::uint64_t>();
  acc.gram_sum_ = matrix_from_json(doc.at("gram_sum"));
  acc.projector_sum_ = matrix_from_json(doc.at("projector_sum"));
  acc.cross_sum_ = matrix_from_json(doc.at("cross_sum")).col(0);
  acc.target_sum_ = doc.at("target_sum").get<double>();
  const int pk = acc.feature_dim_ * acc.blocking_.dim();
  if (acc.gram_sum_.rows() != acc.feature_dim_ || acc.projector_sum_.rows() != pk || acc.cross_sum_.size() != pk) {
    throw InvalidArgument("readout accumulator JSON has inconsistent shapes");
  }
  return acc;
}

PurifiedReadout solve_readout(const ReadoutAccumulator& acc, double gamma, double ridge) {
  if (!(gamma >= 0.0)) throw InvalidArgument("gamma must be >= 0");
  const int k = acc.blocking().dim();
  const int p = acc.feature_dim();
  const int pk = p * k;
  Eigen::MatrixXd kron_g = Eigen::MatrixXd::Zero(pk, pk);
  const Eigen::MatrixXd g = acc.gram();
  for (int j = 0; j < k; ++j) kron_g.block(j * p, j * p, p, p) = g;
  Eigen::MatrixXd variance = kron_g - acc.mean_projector();
  variance = 0.5 * (variance + variance.transpose());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> var_eig(variance, Eigen::EigenvaluesOnly);
  const double var_scale = std::max(var_eig.eigenvalues().cwiseAbs().maxCoeff(), kron_g.diagonal().maxCoeff());
  if (var_eig.eigenvalues().minCoeff() < -1e-8 * var_scale) {
    throw NumericalInconsistency(fmt::format("equivariance-loss matrix is indefinite (min eigenvalue {:.3e}, scale {:.3e})",
                                             var_eig.eigenvalues().minCoeff(), var_scale));
  }

  Eigen::MatrixXd normal = kron_g + gamma * variance;
  if (ridge < 0.0) ridge = kDefaultRidgeScale * normal.trace() / pk;
  normal.diagonal().array() += ridge;

  Eigen::LLT<Eigen::MatrixXd> llt(normal);
  if (llt.info() != Eigen::Success) throw NumericalInconsistency("normal matrix is not positive definite; increase the ridge");
  const Eigen::VectorXd t = llt.solve(acc.cross());

  PurifiedReadout out;
  out.theta = Eigen::Map<const Eigen::MatrixXd>(t.data(), p, k);
  out.gamma = gamma;
  out.ridge = ridge;
  out.achieved_L_mu = acc.loss_mu(out.theta);
  out.achieved_L_sigma = acc.loss_sigma(out.theta);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(normal, Eigen::EigenvaluesOnly);
  out.min_eigenvalue = eig.eigenvalues().minCoeff();
  out.max_eigenvalue = eig.eigenvalues().maxCoeff();
  return out;
}

nlohmann::json PurifiedReadout::to_json() const {
  return {{"format", "symprobe.purified_readout"},
          {"version", 1},
          {"gamma", gamma},
          {"ridge", ridge},
          {"achieved_L_mu", achieved_L_mu},
          {"achieved_L_sigma", achieved_L_sigma},
          {"min_eigenvalue", min_eigenvalue},
          {"max_eigenvalue", max_eigenvalue},
          {"theta", matrix_json(theta)}};
}

PurifiedReadout PurifiedReadout::from_json(const nlohmann::json& doc) {
  if (doc.value("format", "") != "symprobe.purified_readout") throw InvalidArgument("not a purified readout");
  PurifiedReadout r;
  r.gamma = doc.at("gamma").get<double>();
  r.ridge = doc.at("ridge").get<double>();
  r.achieved_L_mu = doc.at("achieved_L_mu").get<double>();
  r.achieved_L_sigma = doc.at("achieved_L_sigma").get<double>();
  r.min_eigenvalue = doc.at("min_eigenvalue").get<double>();
  r.max_eigenvalue = doc.at("max_eigenvalue").get<double>();
  r.theta = matrix_from_json(doc.at("theta"));
  return r;
}

Eigen::MatrixXd readout_orbit(const Eigen::MatrixXd& theta, const ReadoutSample& sample) {
  return sample.features * theta;
}

std::vector<TradeoffRow> evaluate_tradeoff(const std::vector<PurifiedReadout>& ladder,
                                           const std::vector<ReadoutSample>& heldout, const O3Grid& grid,
                                           const OutputBlocking& blocking) {
  if (heldout.empty()) throw InvalidArgument("no held-out samples");
  const int p = int(heldout.front().features.cols());
  ReadoutAccumulator acc(grid, p, blocking);
  for (const auto& s : heldout) acc.add(s);
  std::vector<TradeoffRow> rows;
  for (const auto& r : ladder) {
    double a = 0.0;
    for (const auto& s : heldout) a += equivariance_error(readout_orbit(r.theta, s), grid, blocking.label);
    rows.push_back({r.gamma, std::sqrt(std::max(0.0, acc.loss_mu(r.theta)) / blocking.dim()), a / double(heldout.size()),
                    r.achieved_L_sigma});
  }
  return rows;
}

std::string tradeoff_csv(const std::vector<TradeoffRow>& rows) {
  std::string out = "gamma,rmse,equivariance_error,train_L_sigma\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{}\n", format_double(r.gamma), format_double(r.rmse),
                       format_double(r.equivariance_error), format_double(r.train_L_sigma));
  }
  return out;
}

std::vector<ReadoutSample> collect_samples(ProbeFunction& f, const std::string& tap,
                                           const std::vector<DecoratedPointCloud>& clouds,
                                           const std::vector<Eigen::VectorXd>& targets, const O3Grid& grid,
                                           int threads) {
  if (clouds.size() != targets.size()) throw InvalidArgument("one target per cloud required");
  std::vector<ReadoutSample> out;
  out.reserve(clouds.size());
  for (std::size_t s = 0; s < clouds.size(); ++s) out.push_back({sample_orbit(f, tap, clouds[s], grid, threads), targets[s]});
  return out;
}

ContaminatedFixture contaminated_fixture(const ContaminatedFixtureSpec& spec) {
  if (spec.count < 1) throw InvalidArgument("fixture needs at least one sample");
  const double eta = spec.eta;
  auto features = [eta](const DecoratedPointCloud& x) {
    const Positions c = x.centered();
    const Eigen::VectorXd u = oracle_value(IrrepLabel(1, 1), 0, x);
    const Eigen::VectorXd u2 = oracle_value(IrrepLabel(1, 1), 1, x);
    Vec3 n = Vec3::Zero();
    for (Eigen::Index i = 0; i < c.rows(); ++i) n += c.row(i).transpose().cwiseAbs2();
    Eigen::VectorXd phi(6);
    phi << u, u2 + eta * n;
    return phi;
  };
  ContaminatedFixture fx{FunctionProbe("llf", 6, features), {}, {}, OutputBlocking{IrrepLabel(1, 1), 1}};

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> normal;
  for (int s = 0; s < spec.count; ++s) {
    DecoratedPointCloud x(Positions(5, 3));
    for (int i = 0; i < 5; ++i) {
      for (int k = 0; k < 3; ++k) x.positions(i, k) = normal(rng);
    }
    Eigen::VectorXd xi(3);
    for (int k = 0; k < 3; ++k) xi(k) = spec.noise * normal(rng);
    fx.targets.push_back(oracle_value(IrrepLabel(1, 1), 0, x) + spec.beta * oracle_value(IrrepLabel(1, 1), 1, x) + xi);
    fx.clouds.push_back(std::move(x));
  }
  return fx;
}

std::vector<double> default_gamma_ladder() { return {0.0, 0.1, 1.0, 10.0, 100.0}; }

}  // namespace symprobe
