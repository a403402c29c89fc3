#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json_fwd.hpp>

#include "symprobe/o3.hpp"
#include "symprobe/pointcloud.hpp"
#include "symprobe/probe.hpp"
#include "symprobe/quadrature.hpp"

namespace symprobe {

/// Model outputs along the group orbit of one input: row i is f(act(g_i, x)).
using OrbitSamples = Eigen::MatrixXd;

/// Evaluates f once per grid node, requesting all taps in one call per node.
/// Uses up to `threads` workers when the probe is concurrent-safe; results are
/// identical for any thread count.
std::map<std::string, OrbitSamples> sample_orbit(ProbeFunction& f, const std::vector<std::string>& taps,
                                                 const DecoratedPointCloud& x, const O3Grid& grid, int threads = 1);
OrbitSamples sample_orbit(ProbeFunction& f, const std::string& tap, const DecoratedPointCloud& x,
                          const O3Grid& grid, int threads = 1);

/// Single-average form of the equivariance error from orbit samples.
///
/// The output (dimension k * d_alpha) is read as k consecutive alpha-blocks and
/// rho_alpha acts on each block. Throws NumericalInconsistency when the
/// radicand is below -1e-6 of the mean squared norm.
double equivariance_error(const OrbitSamples& samples, const O3Grid& grid, const IrrepLabel& alpha);
double equivariance_error(ProbeFunction& f, const std::string& tap, const IrrepLabel& alpha,
                          const DecoratedPointCloud& x, const O3Grid& grid, int threads = 1);

/// Double-average form: the spread of f(hx) around the back-transformed orbit
/// mean, averaged over h. Costs |grid|^2 evaluations at composed elements.
double equivariance_error_direct(ProbeFunction& f, const std::string& tap, const IrrepLabel& alpha,
                                 const DecoratedPointCloud& x, const O3Grid& grid);
/// Several labels from one set of |grid|^2 evaluations.
std::map<IrrepLabel, double> equivariance_errors_direct(ProbeFunction& f, const std::string& tap,
                                                        const std::vector<IrrepLabel>& alphas,
                                                        const DecoratedPointCloud& x, const O3Grid& grid);

struct SpectrumReport {
  std::string tap;
  int lambda_max = 0;
  /// Haar mean of the squared output norm.
  double total_norm = 0.0;
  std::map<IrrepLabel, double> projections;
  std::map<IrrepLabel, double> normalized;
  /// total_norm - sum of projections: the part above lambda_max.
  double residual = 0.0;
  /// total_norm below 1e-14; normalized values are then reported as 0.
  bool degenerate = false;

  nlohmann::json to_json() const;
  static SpectrumReport from_json(const nlohmann::json& doc);
};

/// Character projections B_alpha for all labels with lambda <= lambda_max from one
/// pass over the orbit: parity-split samples are Fourier-transformed against D^lambda.
/// Throws CapacityError when lambda_max exceeds the grid band limit.
SpectrumReport character_projection(const OrbitSamples& samples, const O3Grid& grid, int lambda_max);
SpectrumReport character_projection(ProbeFunction& f, const std::string& tap, const DecoratedPointCloud& x,
                                    const O3Grid& grid, int lambda_max, int threads = 1);
/// One report per tap from a single orbit sweep.
std::map<std::string, SpectrumReport> character_projections(ProbeFunction& f, const std::vector<std::string>& taps,
                                                            const DecoratedPointCloud& x, const O3Grid& grid,
                                                            int lambda_max, int threads = 1);

/// Literal double average d^2 < || < chi(h^-1) t(h g x) >_h ||^2 >_g. |grid|^2 evaluations.
double character_projection_direct(ProbeFunction& f, const std::string& tap, const DecoratedPointCloud& x,
                                   const O3Grid& grid, const IrrepLabel& alpha);
std::map<IrrepLabel, double> character_projections_direct(ProbeFunction& f, const std::string& tap,
                                                          const DecoratedPointCloud& x, const O3Grid& grid,
                                                          const std::vector<IrrepLabel>& alphas);

/// (total_norm - sum B) / total_norm; 0 for a degenerate report.
double sum_rule_check(const SpectrumReport& report);

/// Mean normalized projections per (layer, epoch). Epoch -1 is the untrained column.
class HeatmapTable {
 public:
  static constexpr int kUntrained = -1;

  /// Adds one report to the running mean of column (layer, epoch).
  /// Throws InvalidArgument if lambda_max differs from earlier reports.
  void accumulate(int epoch, const std::string& layer, const SpectrumReport& report);

  std::vector<std::string> layers() const;
  std::vector<int> epochs(const std::string& layer) const;
  std::optional<int> lambda_max() const { return lambda_max_; }
  /// Mean normalized projection; throws InvalidArgument for a missing column.
  double value(const std::string& layer, int epoch, const IrrepLabel& label) const;
  int count(const std::string& layer, int epoch) const;

  /// Columns: epoch, layer, lambda, sigma, value. The untrained column prints as "U".
  std::string to_csv() const;
  nlohmann::json to_json() const;

 private:
  struct Column {
    int count = 0;
    std::map<IrrepLabel, double> sum;
  };
  std::optional<int> lambda_max_;
  std::map<std::string, std::map<int, Column>> columns_;
};

}  // namespace symprobe
