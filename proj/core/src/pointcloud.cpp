#include "symprobe/pointcloud.hpp"

#include <cmath>

#include <fmt/format.h>

#include "symprobe/errors.hpp"

namespace symprobe {

Vec3 DecoratedPointCloud::centroid() const { return positions.colwise().mean().transpose(); }

Positions DecoratedPointCloud::centered() const {
  return positions.rowwise() - positions.colwise().mean();
}

void DecoratedPointCloud::validate() const {
  const auto n = positions.rows();
  if (n < 1) throw InvalidArgument("point cloud must contain at least one point");
  if (!positions.allFinite()) throw InvalidArgument("point cloud positions must be finite");
  for (const auto& [name, values] : scalar_attrs) {
    if (values.rows() != n) {
      throw InvalidArgument(fmt::format("scalar attribute '{}' has {} rows, expected {}", name, values.rows(), n));
    }
  }
  for (const auto& [name, values] : vector_attrs) {
    if (values.rows() != n) {
      throw InvalidArgument(fmt::format("vector attribute '{}' has {} rows, expected {}", name, values.rows(), n));
    }
  }
  if (periodic && !cell) throw InvalidArgument("periodic cloud needs a cell");
}

DecoratedPointCloud act(const GroupElement& g, const DecoratedPointCloud& x) {
  if (g.is_identity()) return x;
  DecoratedPointCloud out = x;
  const Mat3 m = g.matrix();
  const Eigen::RowVector3d c = x.positions.colwise().mean();
  out.positions = ((x.positions.rowwise() - c) * m.transpose()).rowwise() + c;
  for (auto& [name, values] : out.vector_attrs) values = values * m.transpose();
  if (out.cell) *out.cell = (*x.cell) * m.transpose();
  return out;
}

std::vector<Edge> pairwise_edges(const DecoratedPointCloud& x, double cutoff) {
  if (!(cutoff > 0.0)) throw InvalidArgument("edge cutoff must be positive");
  const auto n = x.size();
  std::optional<Mat3> inv_cell;
  if (x.periodic) {
    const Mat3& cell = *x.cell;
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        const double dot = cell.row(a).dot(cell.row(b));
        if (std::abs(dot) > 1e-10 * cell.row(a).norm() * cell.row(b).norm()) {
          throw InvalidArgument("periodic edges are only supported for orthorhombic cells (orthogonal lattice vectors)");
        }
      }
    }
    const double shortest = cell.rowwise().norm().minCoeff();
    if (cutoff > 0.5 * shortest) {
      throw InvalidArgument(fmt::format("cutoff {} exceeds half the shortest lattice vector ({})", cutoff, shortest));
    }
    inv_cell = cell.inverse();
  }

  std::vector<Edge> edges;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      Vec3 d = (x.positions.row(j) - x.positions.row(i)).transpose();
      if (inv_cell) {
        Eigen::RowVector3d frac = d.transpose() * (*inv_cell);
        frac = frac.array() - frac.array().round();
        d = (frac * (*x.cell)).transpose();
      }
      const double r = d.norm();
      if (r == 0.0) throw InvalidArgument(fmt::format("points {} and {} coincide", i, j));
      if (r <= cutoff) edges.push_back(Edge{int(i), int(j), d, r});
    }
  }
  return edges;
}

}  // namespace symprobe
