#pragma once

#include <random>

#include <Eigen/Core>

#include "symprobe/o3.hpp"
#include "symprobe/pointcloud.hpp"
#include "symprobe/probe.hpp"
#include "symprobe/targets.hpp"

namespace symprobe::fixtures {

inline DecoratedPointCloud random_cloud(std::mt19937_64& rng, int n, double spread = 1.0) {
  std::normal_distribution<double> normal;
  DecoratedPointCloud x(Positions(n, 3));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < 3; ++k) x.positions(i, k) = spread * normal(rng) + 0.3 * k;
  }
  return x;
}

/// Random linear map of per-point solid harmonics (lambda <= band) of the centered
/// positions, plus Q-weighted copies up to band - 1 so that both parities appear.
/// The orbit function has band limit `band` but obeys no particular transformation law.
inline FunctionProbe random_band_limited_probe(std::mt19937_64& rng, int dim, int band, int points) {
  const int per_point = (band + 1) * (band + 1);
  const int pseudo = band * band;
  const int features = points * (per_point + pseudo);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd mix(dim, features);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < features; ++c) mix(r, c) = normal(rng);
  }
  return FunctionProbe("y", dim, [mix, band, points, per_point, pseudo](const DecoratedPointCloud& x) {
    const Positions c = x.centered();
    const double q = pseudoscalar_Q(x);
    Eigen::VectorXd phi(mix.cols());
    for (int i = 0; i < points; ++i) {
      const Vec3 r = c.row(i).transpose();
      const Eigen::VectorXd s = real_solid_harmonics_flat(r, band);
      phi.segment(i * (per_point + pseudo), per_point) = s;
      if (pseudo > 0) phi.segment(i * (per_point + pseudo) + per_point, pseudo) = q * s.head(pseudo);
    }
    return Eigen::VectorXd(mix * phi);
  });
}

/// Single solid-harmonic block of order lambda of the first centered point; pure
/// (lambda, +1) orbit content, used to probe above a cap.
inline FunctionProbe single_block_probe(int lambda) {
  return FunctionProbe("y", 2 * lambda + 1, [lambda](const DecoratedPointCloud& x) {
    const Vec3 r = x.centered().row(0).transpose();
    return Eigen::VectorXd(real_solid_harmonics(r, lambda)[size_t(lambda)]);
  });
}

}  // namespace symprobe::fixtures
