#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json_fwd.hpp>

#include "symprobe/o3.hpp"

namespace symprobe {

enum class GridScheme { lebedev_trapezoid, gauss_product };

std::string to_string(GridScheme scheme);
GridScheme parse_grid_scheme(const std::string& text);

/// Weighted group elements realizing the normalized Haar average over SO(3) or O(3).
///
/// O(3) grids store all proper nodes first, then the improper copies in the
/// same order (node i + size()/2 is node i composed with the inversion).
class O3Grid {
 public:
  O3Grid(std::vector<GroupElement> nodes, std::vector<double> weights, int band_limit, bool covers_parity,
         GridScheme scheme);

  const std::vector<GroupElement>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return nodes_.size(); }
  int band_limit() const { return band_limit_; }
  bool covers_parity() const { return covers_parity_; }
  GridScheme scheme() const { return scheme_; }
  /// Hash of node matrices and weights; used to detect mismatched grids.
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  std::vector<GroupElement> nodes_;
  std::vector<double> weights_;
  int band_limit_;
  bool covers_parity_;
  GridScheme scheme_;
  std::uint64_t fingerprint_;
};

/// Largest band limit the embedded Lebedev tables support.
int max_lebedev_band_limit();

/// SO(3) product grid, exact for every band-limited function of degree <= 2 * band_limit.
/// Throws CapacityError when no embedded Lebedev table reaches precision 2 * band_limit.
O3Grid build_so3_grid(int band_limit, GridScheme scheme = GridScheme::lebedev_trapezoid);

/// Doubles an SO(3) grid with the inversion coset. Throws InvalidArgument if already extended.
O3Grid extend_to_o3(const O3Grid& grid);

/// Convenience: build_so3_grid followed by extend_to_o3.
O3Grid build_o3_grid(int band_limit, GridScheme scheme = GridScheme::lebedev_trapezoid);

/// sum_i w_i f(g_i).
Eigen::VectorXd haar_average(const O3Grid& grid, const std::function<Eigen::VectorXd(const GroupElement&)>& f);
double haar_average_scalar(const O3Grid& grid, const std::function<double(const GroupElement&)>& f);

/// Haar-uniform rotation (normalized Gaussian quaternion); fair-coin parity if requested.
GroupElement random_group_element(std::mt19937_64& rng, bool include_parity);

/// Max deviation of <D^l_mn D^l'_m'n'>_grid from delta/(2l+1) over l, l' <= lambda_max
/// (both parities on O(3) grids).
double orthogonality_residual(const O3Grid& grid, int lambda_max);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

nlohmann::json grid_to_json(const O3Grid& grid);
O3Grid grid_from_json(const nlohmann::json& doc);

}  // namespace symprobe
