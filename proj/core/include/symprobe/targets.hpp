#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "symprobe/o3.hpp"
#include "symprobe/pointcloud.hpp"
#include "symprobe/probe.hpp"

namespace symprobe {

/// Sum over i<j<k<l of (r_i - r_l) . [(r_j - r_l) x (r_k - r_j)]. O(n^2).
/// Rotation invariant, odd under inversion, and dependent on point order.
double pseudoscalar_Q(const DecoratedPointCloud& x);
/// The same sum as a literal quadruple loop. O(n^4); reference implementation.
double pseudoscalar_Q_literal(const DecoratedPointCloud& x);

/// Exactly (lambda, sigma)-equivariant polynomial of the centroid-relative positions:
///   sigma = +1: sum_i (i + 1) |r_i|^(2 order) S_lambda(r_i)
///   sigma = -1: Q(x) times the sigma = +1 value
/// where S_lambda is the solid-harmonic block. The index weights keep lambda = 1 from
/// vanishing identically. Output has dimension 2 lambda + 1.
Eigen::VectorXd oracle_value(const IrrepLabel& label, int order, const DecoratedPointCloud& x);

constexpr int kMaxOracleLambda = 14;

/// Probes with one tap "y" (or "Q") and its declared irrep.
FunctionProbe oracle_probe(const IrrepLabel& label, int order = 1);
FunctionProbe q_probe();
/// sum_i |r_i - centroid|^2, an exact invariant.
FunctionProbe gyration_probe();
/// Ignores its input; A_(1,+1) equals |c|.
FunctionProbe constant_vector_probe(const Vec3& c);

/// CHBrClF with carbon at the origin, substituents on tetrahedral directions and
/// bond lengths C-H 1.09, C-F 1.35, C-Cl 1.77, C-Br 1.94 (angstrom). Point order C, H, F, Cl, Br.
DecoratedPointCloud chbrclf_geometry();

struct ConformerSpec {
  DecoratedPointCloud base = chbrclf_geometry();
  double rattle_sigma = 0.05;
  int count = 1000;
  std::uint64_t seed = 0;
  bool random_orientation = true;
  /// Also apply the inversion with probability 1/2, producing both enantiomers.
  bool random_parity = false;
};

struct Conformer {
  DecoratedPointCloud cloud;  // info["Q"] holds q
  double q;
};

/// Gaussian rattle of every coordinate, then an optional random orientation about
/// the centroid. Conformer k draws from its own stream seeded by (seed, k), so
/// the result does not depend on how the work is split.
std::vector<Conformer> rattled_conformers(const ConformerSpec& spec);

}  // namespace symprobe
