#include "symprobe/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "symprobe/errors.hpp"
#include "symprobe/json_io.hpp"

namespace symprobe {

int ProbeFunction::dim(const std::string& tap) const {
  const auto& s = schema();
  auto it = s.find(tap);
  if (it == s.end()) {
    std::string known;
    for (const auto& [name, d] : s) known += (known.empty() ? "" : ", ") + name;
    throw InvalidArgument(fmt::format("unknown tap '{}' (available: {})", tap, known));
  }
  return it->second;
}

FunctionProbe::FunctionProbe(const std::string& tap, int dim,
                             std::function<Eigen::VectorXd(const DecoratedPointCloud&)> fn)
    : schema_{{tap, dim}}, fn_([tap, fn = std::move(fn)](const DecoratedPointCloud& x) {
        return TapValues{{tap, fn(x)}};
      }) {}

TapValues FunctionProbe::evaluate(const DecoratedPointCloud& x, const std::vector<std::string>&) { return fn_(x); }

namespace {

void require_parity(const O3Grid& grid) {
  if (!grid.covers_parity()) throw InvalidArgument("metrics need an O(3) grid (covers_parity)");
}

void require_blocking(Eigen::Index dim, const IrrepLabel& alpha) {
  if (dim % alpha.dim() != 0) {
    throw InvalidArgument(fmt::format("output dimension {} is not a multiple of dim{} = {}", dim, alpha.to_string(),
                                      alpha.dim()));
  }
}

// rho(g)^T applied to each consecutive d-block of v.
Eigen::VectorXd back_transform(const Eigen::MatrixXd& rho, const Eigen::VectorXd& v) {
  const Eigen::Index d = rho.rows();
  Eigen::VectorXd out(v.size());
  Eigen::Map<const Eigen::MatrixXd> in_blocks(v.data(), d, v.size() / d);
  Eigen::Map<Eigen::MatrixXd> out_blocks(out.data(), d, v.size() / d);
  out_blocks.noalias() = rho.transpose() * in_blocks;
  return out;
}

Eigen::VectorXd eval_tap(ProbeFunction& f, const std::string& tap, const DecoratedPointCloud& x, int dim) {
  TapValues values = f.evaluate(x, {tap});
  auto it = values.find(tap);
  if (it == values.end()) throw ProtocolError(fmt::format("probe did not return tap '{}'", tap));
  if (it->second.size() != dim) {
    throw ProtocolError(fmt::format("tap '{}' returned {} values, schema says {}", tap, it->second.size(), dim));
  }
  return std::move(it->second);
}

void check_radicand(double total, double mean_sq) {
  const double radicand = total - mean_sq;
  if (radicand < -1e-6 * total) {
    throw NumericalInconsistency(fmt::format(
        "negative equivariance radicand {:.3e} (mean norm {:.3e}); the grid band limit is too low for this output",
        radicand, total));
  }
}

}  // namespace

std::map<std::string, OrbitSamples> sample_orbit(ProbeFunction& f, const std::vector<std::string>& taps,
                                                 const DecoratedPointCloud& x, const O3Grid& grid, int threads) {
  if (taps.empty()) throw InvalidArgument("no taps requested");
  std::vector<int> dims;
  std::map<std::string, OrbitSamples> out;
  for (const auto& tap : taps) {
    dims.push_back(f.dim(tap));
    out[tap].resize(Eigen::Index(grid.size()), dims.back());
  }
  x.validate();

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      TapValues values = f.evaluate(act(grid.nodes()[i], x), taps);
      for (std::size_t t = 0; t < taps.size(); ++t) {
        auto it = values.find(taps[t]);
        if (it == values.end()) throw ProtocolError(fmt::format("probe did not return tap '{}'", taps[t]));
        if (it->second.size() != dims[t]) {
          throw ProtocolError(fmt::format("tap '{}' returned {} values, schema says {}", taps[t], it->second.size(),
                                          dims[t]));
        }
        out[taps[t]].row(Eigen::Index(i)) = it->second.transpose();
      }
    }
  };

  const std::size_t n = grid.size();
  const std::size_t workers = f.concurrent_safe() ? std::clamp<std::size_t>(std::size_t(std::max(threads, 1)), 1, n) : 1;
  if (workers == 1) {
    work(0, n);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        work(n * w / workers, n * (w + 1) / workers);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

OrbitSamples sample_orbit(ProbeFunction& f, const std::string& tap, const DecoratedPointCloud& x, const O3Grid& grid,
                          int threads) {
  return std::move(sample_orbit(f, std::vector<std::string>{tap}, x, grid, threads).at(tap));
}

double equivariance_error(const OrbitSamples& samples, const O3Grid& grid, const IrrepLabel& alpha) {
  require_parity(grid);
  require_blocking(samples.cols(), alpha);
  if (samples.rows() != Eigen::Index(grid.size())) throw InvalidArgument("orbit samples do not match the grid");
  const std::size_t n = grid.size();
  std::vector<Eigen::VectorXd> back(n);
  double total = 0.0;
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(samples.cols());
  for (std::size_t i = 0; i < n; ++i) {
    const double w = grid.weights()[i];
    const Eigen::VectorXd row = samples.row(Eigen::Index(i)).transpose();
    total += w * row.squaredNorm();
    back[i] = back_transform(wigner_d(alpha, grid.nodes()[i]).matrix, row);
    mean += w * back[i];
  }
  // Second pass: <|rho^T F - mean|^2> equals <|F|^2> - |mean|^2 without the cancellation.
  double spread = 0.0;
  for (std::size_t i = 0; i < n; ++i) spread += grid.weights()[i] * (back[i] - mean).squaredNorm();
  check_radicand(total, mean.squaredNorm());
  return std::sqrt(spread);
}

double equivariance_error(ProbeFunction& f, const std::string& tap, const IrrepLabel& alpha,
                          const DecoratedPointCloud& x, const O3Grid& grid, int threads) {
  require_parity(grid);
  require_blocking(f.dim(tap), alpha);
  return equivariance_error(sample_orbit(f, tap, x, grid, threads), grid, alpha);
}

double equivariance_error_direct(ProbeFunction& f, const std::string& tap, const IrrepLabel& alpha,
                                 const DecoratedPointCloud& x, const O3Grid& grid) {
  return equivariance_errors_direct(f, tap, {alpha}, x, grid).at(alpha);
}

std::map<IrrepLabel, double> equivariance_errors_direct(ProbeFunction& f, const std::string& tap,
                                                        const std::vector<IrrepLabel>& alphas,
                                                        const DecoratedPointCloud& x, const O3Grid& grid) {
  require_parity(grid);
  const int dim = f.dim(tap);
  const std::size_t n = grid.size();
  std::vector<std::vector<Eigen::MatrixXd>> rho(alphas.size());
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    require_blocking(dim, alphas[a]);
    for (const auto& g : grid.nodes()) rho[a].push_back(wigner_d(alphas[a], g).matrix);
  }

  std::vector<double> total(alphas.size(), 0.0);
  double scale = 0.0;
  std::vector<Eigen::VectorXd> mean(alphas.size());
  for (std::size_t j = 0; j < n; ++j) {
    const GroupElement& h = grid.nodes()[j];
    const Eigen::VectorXd fh = eval_tap(f, tap, act(h, x), dim);
    for (auto& m : mean) m = Eigen::VectorXd::Zero(dim);
    for (std::size_t i = 0; i < n; ++i) {
      const Eigen::VectorXd fgh = eval_tap(f, tap, act(grid.nodes()[i] * h, x), dim);
      for (std::size_t a = 0; a < alphas.size(); ++a) mean[a] += grid.weights()[i] * back_transform(rho[a][i], fgh);
    }
    for (std::size_t a = 0; a < alphas.size(); ++a) total[a] += grid.weights()[j] * (fh - mean[a]).squaredNorm();
    scale += grid.weights()[j] * fh.squaredNorm();
  }
  std::map<IrrepLabel, double> out;
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    if (total[a] < -1e-6 * scale) throw NumericalInconsistency("negative direct equivariance error");
    out[alphas[a]] = std::sqrt(std::max(0.0, total[a]));
  }
  return out;
}

SpectrumReport character_projection(const OrbitSamples& samples, const O3Grid& grid, int lambda_max) {
  require_parity(grid);
  if (lambda_max < 0) throw InvalidArgument("lambda_max must be >= 0");
  if (lambda_max > grid.band_limit()) {
    throw CapacityError(fmt::format("lambda_max {} exceeds the grid band limit {}; build a grid with band limit >= {}",
                                    lambda_max, grid.band_limit(), lambda_max));
  }
  if (samples.rows() != Eigen::Index(grid.size())) throw InvalidArgument("orbit samples do not match the grid");

  const Eigen::Index half = samples.rows() / 2;
  SpectrumReport report;
  report.lambda_max = lambda_max;
  for (Eigen::Index i = 0; i < samples.rows(); ++i) {
    report.total_norm += grid.weights()[size_t(i)] * samples.row(i).squaredNorm();
  }

  // Proper-node Wigner blocks, weighted by the SO(3) weight 2 w_i and laid out as
  // rows of a (half x d^2) design per lambda.
  std::vector<Eigen::MatrixXd> design(size_t(lambda_max) + 1);
  for (int l = 0; l <= lambda_max; ++l) design[size_t(l)].resize(half, (2 * l + 1) * (2 * l + 1));
  for (Eigen::Index i = 0; i < half; ++i) {
    const auto blocks = wigner_d_blocks(lambda_max, grid.nodes()[size_t(i)].rotation());
    const double w = 2.0 * grid.weights()[size_t(i)];
    for (int l = 0; l <= lambda_max; ++l) {
      design[size_t(l)].row(i) = w * Eigen::Map<const Eigen::RowVectorXd>(blocks[size_t(l)].data(), blocks[size_t(l)].size());
    }
  }

  double sum = 0.0;
  for (int s : {+1, -1}) {
    // Part of the orbit function with inversion eigenvalue s.
    const Eigen::MatrixXd part = 0.5 * (samples.topRows(half) + double(s) * samples.bottomRows(half));
    for (int l = 0; l <= lambda_max; ++l) {
      const IrrepLabel label(l, (l % 2 == 0) ? s : -s);
      const Eigen::MatrixXd coeffs = design[size_t(l)].transpose() * part;
      const double b = (2 * l + 1) * coeffs.squaredNorm();
      report.projections[label] = b;
      sum += b;
    }
  }
  report.residual = report.total_norm - sum;
  report.degenerate = report.total_norm < 1e-14;
  for (const auto& [label, b] : report.projections) report.normalized[label] = report.degenerate ? 0.0 : b / report.total_norm;
  return report;
}

SpectrumReport character_projection(ProbeFunction& f, const std::string& tap, const DecoratedPointCloud& x,
                                    const O3Grid& grid, int lambda_max, int threads) {
  return std::move(character_projections(f, {tap}, x, grid, lambda_max, threads).at(tap));
}

std::map<std::string, SpectrumReport> character_projections(ProbeFunction& f, const std::vector<std::string>& taps,
                                                            const DecoratedPointCloud& x, const O3Grid& grid,
                                                            int lambda_max, int threads) {
  require_parity(grid);
  if (lambda_max > grid.band_limit()) {
    throw CapacityError(fmt::format("lambda_max {} exceeds the grid band limit {}; build a grid with band limit >= {}",
                                    lambda_max, grid.band_limit(), lambda_max));
  }
  std::map<std::string, SpectrumReport> out;
  for (auto& [tap, samples] : sample_orbit(f, taps, x, grid, threads)) {
    SpectrumReport r = character_projection(samples, grid, lambda_max);
    r.tap = tap;
    out.emplace(tap, std::move(r));
  }
  return out;
}

double character_projection_direct(ProbeFunction& f, const std::string& tap, const DecoratedPointCloud& x,
                                   const O3Grid& grid, const IrrepLabel& alpha) {
  return character_projections_direct(f, tap, x, grid, {alpha}).at(alpha);
}

std::map<IrrepLabel, double> character_projections_direct(ProbeFunction& f, const std::string& tap,
                                                          const DecoratedPointCloud& x, const O3Grid& grid,
                                                          const std::vector<IrrepLabel>& alphas) {
  require_parity(grid);
  const int dim = f.dim(tap);
  const std::size_t n = grid.size();
  std::vector<std::vector<double>> chi(alphas.size());
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    if (alphas[a].lambda() > grid.band_limit()) {
      throw CapacityError(
          fmt::format("lambda {} exceeds the grid band limit {}", alphas[a].lambda(), grid.band_limit()));
    }
    for (const auto& h : grid.nodes()) chi[a].push_back(character(alphas[a], h.inverse()));
  }

  std::vector<double> acc(alphas.size(), 0.0);
  std::vector<Eigen::VectorXd> inner(alphas.size());
  for (std::size_t j = 0; j < n; ++j) {
    const GroupElement& g = grid.nodes()[j];
    for (auto& v : inner) v = Eigen::VectorXd::Zero(dim);
    for (std::size_t i = 0; i < n; ++i) {
      const Eigen::VectorXd t = eval_tap(f, tap, act(grid.nodes()[i] * g, x), dim);
      for (std::size_t a = 0; a < alphas.size(); ++a) inner[a] += grid.weights()[i] * chi[a][i] * t;
    }
    for (std::size_t a = 0; a < alphas.size(); ++a) acc[a] += grid.weights()[j] * inner[a].squaredNorm();
  }
  std::map<IrrepLabel, double> out;
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    const double d = alphas[a].dim();
    out[alphas[a]] = d * d * acc[a];
  }
  return out;
}

double sum_rule_check(const SpectrumReport& report) {
  if (report.degenerate) return 0.0;
  return report.residual / report.total_norm;
}

nlohmann::json SpectrumReport::to_json() const {
  nlohmann::json channels = nlohmann::json::array();
  for (const auto& [label, b] : projections) {
    channels.push_back({{"lambda", label.lambda()},
                        {"sigma", label.sigma()},
                        {"value", b},
                        {"normalized", normalized.at(label)}});
  }
  return {{"tap", tap},
          {"lambda_max", lambda_max},
          {"total_norm", total_norm},
          {"residual", residual},
          {"degenerate", degenerate},
          {"projections", channels}};
}

SpectrumReport SpectrumReport::from_json(const nlohmann::json& doc) {
  SpectrumReport r;
  r.tap = doc.at("tap").get<std::string>();
  r.lambda_max = doc.at("lambda_max").get<int>();
  r.total_norm = doc.at("total_norm").get<double>();
  r.residual = doc.at("residual").get<double>();
  r.degenerate = doc.at("degenerate").get<bool>();
  for (const auto& c : doc.at("projections")) {
    IrrepLabel label(c.at("lambda").get<int>(), c.at("sigma").get<int>());
    r.projections[label] = c.at("value").get<double>();
    r.normalized[label] = c.at("normalized").get<double>();
  }
  return r;
}

void HeatmapTable::accumulate(int epoch, const std::string& layer, const SpectrumReport& report) {
  if (epoch < kUntrained) throw InvalidArgument("epoch must be >= -1 (untrained)");
  if (lambda_max_ && *lambda_max_ != report.lambda_max) {
    throw InvalidArgument(fmt::format("report lambda_max {} differs from the table's {}", report.lambda_max,
                                      *lambda_max_));
  }
  lambda_max_ = report.lambda_max;
  Column& col = columns_[layer][epoch];
  for (const auto& [label, v] : report.normalized) col.sum[label] += v;
  ++col.count;
}

std::vector<std::string> HeatmapTable::layers() const {
  std::vector<std::string> out;
  for (const auto& [name, cols] : columns_) out.push_back(name);
  return out;
}

std::vector<int> HeatmapTable::epochs(const std::string& layer) const {
  std::vector<int> out;
  if (auto it = columns_.find(layer); it != columns_.end()) {
    for (const auto& [e, col] : it->second) out.push_back(e);
  }
  return out;
}

int HeatmapTable::count(const std::string& layer, int epoch) const {
  auto it = columns_.find(layer);
  if (it == columns_.end()) return 0;
  auto jt = it->second.find(epoch);
  return jt == it->second.end() ? 0 : jt->second.count;
}

double HeatmapTable::value(const std::string& layer, int epoch, const IrrepLabel& label) const {
  auto it = columns_.find(layer);
  if (it == columns_.end()) throw InvalidArgument(fmt::format("no heatmap layer '{}'", layer));
  auto jt = it->second.find(epoch);
  if (jt == it->second.end()) throw InvalidArgument(fmt::format("no column for epoch {} in layer '{}'", epoch, layer));
  auto kt = jt->second.sum.find(label);
  return kt == jt->second.sum.end() ? 0.0 : kt->second / jt->second.count;
}

std::string HeatmapTable::to_csv() const {
  std::string out = "epoch,layer,lambda,sigma,value\n";
  for (const auto& [layer, cols] : columns_) {
    for (const auto& [epoch, col] : cols) {
      const std::string e = epoch == kUntrained ? "U" : std::to_string(epoch);
      for (const auto& [label, sum] : col.sum) {
        out += fmt::format("{},{},{},{},{}\n", e, layer, label.lambda(), label.sigma(),
                           format_double(sum / col.count));
      }
    }
  }
  return out;
}

nlohmann::json HeatmapTable::to_json() const {
  nlohmann::json layers = nlohmann::json::object();
  for (const auto& [layer, cols] : columns_) {
    nlohmann::json columns = nlohmann::json::array();
    for (const auto& [epoch, col] : cols) {
      nlohmann::json values = nlohmann::json::object();
      for (const auto& [label, sum] : col.sum) values[label.to_string()] = sum / col.count;
      columns.push_back({{"epoch", epoch == kUntrained ? nlohmann::json("U") : nlohmann::json(epoch)},
                         {"count", col.count},
                         {"normalized", values}});
    }
    layers[layer] = columns;
  }
  return {{"lambda_max", lambda_max_.value_or(-1)}, {"layers", layers}};
}

}  // namespace symprobe
