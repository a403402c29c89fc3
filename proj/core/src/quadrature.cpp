#include "symprobe/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "symprobe/errors.hpp"
#include "symprobe/lebedev.hpp"

namespace symprobe {

std::string to_string(GridScheme scheme) {
  return scheme == GridScheme::lebedev_trapezoid ? "lebedev_trapezoid" : "gauss_product";
}

GridScheme parse_grid_scheme(const std::string& text) {
  if (text == "lebedev_trapezoid") return GridScheme::lebedev_trapezoid;
  if (text == "gauss_product") return GridScheme::gauss_product;
  throw InvalidArgument("unknown grid scheme '" + text + "' (expected lebedev_trapezoid or gauss_product)");
}

namespace {

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

O3Grid::O3Grid(std::vector<GroupElement> nodes, std::vector<double> weights, int band_limit, bool covers_parity,
               GridScheme scheme)
    : nodes_(std::move(nodes)),
      weights_(std::move(weights)),
      band_limit_(band_limit),
      covers_parity_(covers_parity),
      scheme_(scheme) {
  if (nodes_.empty() || nodes_.size() != weights_.size()) {
    throw InvalidArgument("grid needs one weight per node and at least one node");
  }
  if (band_limit_ < 0) throw InvalidArgument("grid band limit must be >= 0");
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0)) throw InvalidArgument("grid weights must be positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw InvalidArgument(fmt::format("grid weights must sum to 1 (got {:.17g})", sum));
  }
  if (covers_parity_) {
    const std::size_t half = nodes_.size() / 2;
    bool paired = nodes_.size() % 2 == 0;
    for (std::size_t i = 0; paired && i < half; ++i) {
      paired = !nodes_[i].parity() && nodes_[i + half].parity() &&
               nodes_[i].rotation() == nodes_[i + half].rotation() && weights_[i] == weights_[i + half];
    }
    if (!paired) throw InvalidArgument("O(3) grid must list proper nodes then their inverted copies");
  }
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    h = fnv1a(h, nodes_[i].rotation().data(), sizeof(double) * 9);
    const bool p = nodes_[i].parity();
    h = fnv1a(h, &p, sizeof p);
    h = fnv1a(h, &weights_[i], sizeof(double));
  }
  fingerprint_ = h;
}

int max_lebedev_band_limit() { return detail::lebedev_tables().back().precision / 2; }

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw InvalidArgument("Gauss-Legendre rule needs at least one node");
  // Golub-Welsch: eigenvalues of the Jacobi matrix.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi);
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    nodes[i] = eig.eigenvalues()(i);
    const double v = eig.eigenvectors()(0, i);
    weights[i] = 2.0 * v * v;
  }
}

O3Grid build_so3_grid(int band_limit, GridScheme scheme) {
  if (band_limit < 0) throw InvalidArgument("band limit must be >= 0");
  if (band_limit == 0) return O3Grid({GroupElement::identity()}, {1.0}, 0, false, scheme);

  const int n_gamma = 2 * band_limit + 2;
  std::vector<GroupElement> nodes;
  std::vector<double> weights;

  if (scheme == GridScheme::lebedev_trapezoid) {
    const detail::LebedevTable* table = nullptr;
    for (const auto& t : detail::lebedev_tables()) {
      // Some Lebedev rules (precision 13) carry negative weights; Haar grids need positive ones.
      const bool positive = std::all_of(t.nodes.begin(), t.nodes.end(), [](const auto& n) { return n.weight > 0.0; });
      if (positive && t.precision >= 2 * band_limit) {
        table = &t;
        break;
      }
    }
    if (table == nullptr) {
      throw CapacityError(fmt::format(
          "band limit {} needs a Lebedev rule of precision {}; the largest embedded rule supports band limit {} "
          "(use scheme gauss_product for higher band limits)",
          band_limit, 2 * band_limit, max_lebedev_band_limit()));
    }
    nodes.reserve(table->nodes.size() * n_gamma);
    for (const auto& node : table->nodes) {
      const double beta = std::acos(std::clamp(node.z, -1.0, 1.0));
      const double alpha = std::atan2(node.y, node.x);
      for (int k = 0; k < n_gamma; ++k) {
        const double gamma = 2.0 * std::numbers::pi * k / n_gamma;
        nodes.push_back(GroupElement::from_euler_zyz(alpha, beta, gamma));
        weights.push_back(node.weight / n_gamma);
      }
    }
  } else {
    std::vector<double> x, wx;
    gauss_legendre(band_limit + 1, x, wx);
    const int n_alpha = 2 * band_limit + 2;
    for (std::size_t b = 0; b < x.size(); ++b) {
      const double beta = std::acos(x[b]);
      for (int a = 0; a < n_alpha; ++a) {
        const double alpha = 2.0 * std::numbers::pi * a / n_alpha;
        for (int k = 0; k < n_gamma; ++k) {
          const double gamma = 2.0 * std::numbers::pi * k / n_gamma;
          nodes.push_back(GroupElement::from_euler_zyz(alpha, beta, gamma));
          weights.push_back(0.5 * wx[b] / double(n_alpha * n_gamma));
        }
      }
    }
  }
  // Renormalize away the last ulp of drift in the table weights.
  double sum = 0.0;
  for (double w : weights) sum += w;
  for (double& w : weights) w /= sum;
  return O3Grid(std::move(nodes), std::move(weights), band_limit, false, scheme);
}

O3Grid extend_to_o3(const O3Grid& grid) {
  if (grid.covers_parity()) throw InvalidArgument("grid already covers the inversion coset");
  std::vector<GroupElement> nodes;
  std::vector<double> weights;
  const std::size_t n = grid.size();
  nodes.reserve(2 * n);
  weights.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    nodes.push_back(grid.nodes()[i]);
    weights.push_back(0.5 * grid.weights()[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    nodes.push_back(grid.nodes()[i] * GroupElement::inversion());
    weights.push_back(0.5 * grid.weights()[i]);
  }
  return O3Grid(std::move(nodes), std::move(weights), grid.band_limit(), true, grid.scheme());
}

O3Grid build_o3_grid(int band_limit, GridScheme scheme) { return extend_to_o3(build_so3_grid(band_limit, scheme)); }

Eigen::VectorXd haar_average(const O3Grid& grid, const std::function<Eigen::VectorXd(const GroupElement&)>& f) {
  Eigen::VectorXd acc;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    Eigen::VectorXd v = f(grid.nodes()[i]);
    if (i == 0) {
      acc = grid.weights()[i] * v;
    } else {
      if (v.size() != acc.size()) throw InvalidArgument("haar_average: function output size changed between nodes");
      acc += grid.weights()[i] * v;
    }
  }
  return acc;
}

double haar_average_scalar(const O3Grid& grid, const std::function<double(const GroupElement&)>& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) acc += grid.weights()[i] * f(grid.nodes()[i]);
  return acc;
}

GroupElement random_group_element(std::mt19937_64& rng, bool include_parity) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Quaterniond q;
  do {
    q = Eigen::Quaterniond(normal(rng), normal(rng), normal(rng), normal(rng));
  } while (q.norm() < 1e-8);
  bool parity = false;
  if (include_parity) parity = std::bernoulli_distribution(0.5)(rng);
  return GroupElement::from_quaternion(q, parity);
}

double orthogonality_residual(const O3Grid& grid, int lambda_max) {
  if (lambda_max < 0) return 0.0;
  const int nparity = grid.covers_parity() ? 2 : 1;
  // Flattened table: for each node, every entry of every (l, sigma) block.
  std::vector<int> offsets;
  std::vector<int> dims;
  int total = 0;
  for (int l = 0; l <= lambda_max; ++l) {
    for (int p = 0; p < nparity; ++p) {
      offsets.push_back(total);
      dims.push_back(2 * l + 1);
      total += (2 * l + 1) * (2 * l + 1);
    }
  }
  Eigen::MatrixXd table(grid.size(), total);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& g = grid.nodes()[i];
    const auto blocks = wigner_d_blocks(lambda_max, g.rotation());
    int col = 0;
    for (int l = 0; l <= lambda_max; ++l) {
      for (int p = 0; p < nparity; ++p) {
        const double sign = (p == 1 && g.parity()) ? -1.0 : 1.0;
        const auto& d = blocks[l];
        for (int a = 0; a < d.rows(); ++a)
          for (int b = 0; b < d.cols(); ++b) table(i, col++) = sign * d(a, b);
      }
    }
  }
  Eigen::VectorXd sqrt_w(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) sqrt_w(i) = std::sqrt(grid.weights()[i]);
  const Eigen::MatrixXd weighted = sqrt_w.asDiagonal() * table;
  const Eigen::MatrixXd gram = weighted.transpose() * weighted;
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(total, total);
  for (std::size_t b = 0; b < offsets.size(); ++b) {
    const int n = dims[b] * dims[b];
    for (int k = 0; k < n; ++k) expected(offsets[b] + k, offsets[b] + k) = 1.0 / dims[b];
  }
  return (gram - expected).cwiseAbs().maxCoeff();
}

nlohmann::json grid_to_json(const O3Grid& grid) {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto q = grid.nodes()[i].quaternion();
    nodes.push_back({{"q", {q.w(), q.x(), q.y(), q.z()}},
                     {"parity", grid.nodes()[i].parity()},
                     {"weight", grid.weights()[i]}});
  }
  return {{"format", "symprobe.grid"},
          {"version", 1},
          {"scheme", to_string(grid.scheme())},
          {"band_limit", grid.band_limit()},
          {"covers_parity", grid.covers_parity()},
          {"nodes", std::move(nodes)}};
}

O3Grid grid_from_json(const nlohmann::json& doc) {
  try {
    if (doc.at("format").get<std::string>() != "symprobe.grid") throw InvalidArgument("not a symprobe grid document");
    std::vector<GroupElement> nodes;
    std::vector<double> weights;
    for (const auto& n : doc.at("nodes")) {
      const auto& q = n.at("q");
      nodes.push_back(GroupElement::from_quaternion(
          Eigen::Quaterniond(q.at(0).get<double>(), q.at(1).get<double>(), q.at(2).get<double>(),
                             q.at(3).get<double>()),
          n.at("parity").get<bool>()));
      weights.push_back(n.at("weight").get<double>());
    }
    double sum = 0.0;
    for (double w : weights) sum += w;
    for (double& w : weights) w /= sum;
    return O3Grid(std::move(nodes), std::move(weights), doc.at("band_limit").get<int>(),
                  doc.at("covers_parity").get<bool>(), parse_grid_scheme(doc.at("scheme").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed grid JSON: ") + e.what());
  }
}

}  // namespace symprobe
