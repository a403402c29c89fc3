#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "symprobe/o3.hpp"

namespace symprobe {

using Positions = Eigen::Matrix<double, Eigen::Dynamic, 3>;

/// Points in 3D with per-point decorations: the input x of every model under study.
///
/// scalar_attrs are invariant (n x k per name); vector_attrs are polar vectors (n x 3)
/// that rotate with the positions. The species attribute, when present, is the
/// scalar attribute "species" holding atomic numbers.
struct DecoratedPointCloud {
  Positions positions;
  std::map<std::string, Eigen::MatrixXd> scalar_attrs;
  std::map<std::string, Positions> vector_attrs;
  /// Rows are lattice vectors.
  std::optional<Mat3> cell;
  bool periodic = false;
  /// Per-cloud numeric properties (e.g. a target value such as Q).
  std::map<std::string, double> info;

  DecoratedPointCloud() = default;
  explicit DecoratedPointCloud(Positions pos) : positions(std::move(pos)) {}

  Eigen::Index size() const { return positions.rows(); }
  Vec3 centroid() const;
  /// Positions minus the centroid.
  Positions centered() const;
  /// Throws InvalidArgument on an empty cloud, mismatched attribute lengths or non-finite positions.
  void validate() const;
};

/// The O(3) action: rotate (and invert, if g has parity) about the centroid.
/// Positions, vector attributes and the cell transform; scalar attributes do not.
DecoratedPointCloud act(const GroupElement& g, const DecoratedPointCloud& x);

struct Edge {
  int i;
  int j;
  Vec3 vec;  // r_j - r_i (minimum image when periodic)
  double norm;
};

/// Directed edges with 0 < |r_ij| <= cutoff, ordered by (i, j).
/// Periodic clouds use the minimum image; only cells with mutually orthogonal
/// lattice vectors are supported and the cutoff must not exceed half the shortest one.
/// Throws InvalidArgument for coincident points, naming the pair.
std::vector<Edge> pairwise_edges(const DecoratedPointCloud& x, double cutoff);

// Element symbols <-> atomic numbers (1..118).
int atomic_number(const std::string& symbol);  // 0 if unknown
const std::string& element_symbol(int z);       // throws if out of range

/// Extended-XYZ: count line, key=value comment line (Lattice, Properties, pbc,
/// plus numeric per-cloud info), then one row per point. Species live in a
/// species:S:1 column and map to the "species" scalar attribute.
std::vector<DecoratedPointCloud> read_xyz(std::istream& in);
std::vector<DecoratedPointCloud> read_xyz_file(const std::string& path);
void write_xyz(std::ostream& out, const std::vector<DecoratedPointCloud>& clouds);
void write_xyz_file(const std::string& path, const std::vector<DecoratedPointCloud>& clouds);

}  // namespace symprobe
