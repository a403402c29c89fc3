#include "symprobe/targets.hpp"

#include <array>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "symprobe/errors.hpp"
#include "symprobe/quadrature.hpp"

namespace symprobe {

double pseudoscalar_Q(const DecoratedPointCloud& x) {
  const auto n = x.size();
  double q = 0.0;
  // For fixed l, with s_m = r_m - r_l: sum_{i<j<k} (s_i x s_j) . s_k.
  for (Eigen::Index l = 3; l < n; ++l) {
    const Vec3 rl = x.positions.row(l).transpose();
    Vec3 prefix = Vec3::Zero();  // sum_{i<k} s_i
    Vec3 cross = Vec3::Zero();   // sum_{i<j<k} s_i x s_j
    for (Eigen::Index k = 0; k < l; ++k) {
      const Vec3 s = x.positions.row(k).transpose() - rl;
      q += cross.dot(s);
      cross += prefix.cross(s);
      prefix += s;
    }
  }
  return q;
}

double pseudoscalar_Q_literal(const DecoratedPointCloud& x) {
  const auto n = x.size();
  const auto r = [&](Eigen::Index i) -> Vec3 { return x.positions.row(i).transpose(); };
  double q = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      for (Eigen::Index k = j + 1; k < n; ++k) {
        for (Eigen::Index l = k + 1; l < n; ++l) {
          q += (r(i) - r(l)).dot((r(j) - r(l)).cross(r(k) - r(j)));
        }
      }
    }
  }
  return q;
}

Eigen::VectorXd oracle_value(const IrrepLabel& label, int order, const DecoratedPointCloud& x) {
  if (label.lambda() > kMaxOracleLambda) {
    throw InvalidArgument(fmt::format("oracle supports lambda <= {}", kMaxOracleLambda));
  }
  if (order < 0) throw InvalidArgument("oracle order must be >= 0");
  const Positions c = x.centered();
  const int l = label.lambda();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(2 * l + 1);
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    const Vec3 r = c.row(i).transpose();
    out += double(i + 1) * std::pow(r.squaredNorm(), order) * real_solid_harmonics(r, l)[size_t(l)];
  }
  if (label.sigma() < 0) out *= pseudoscalar_Q(x);
  return out;
}

FunctionProbe oracle_probe(const IrrepLabel& label, int order) {
  oracle_value(label, order, DecoratedPointCloud(Positions::Zero(1, 3)));  // validate arguments now
  FunctionProbe p("y", label.dim(), [label, order](const DecoratedPointCloud& x) {
    return oracle_value(label, order, x);
  });
  p.declared_irreps.emplace("y", label);
  return p;
}

FunctionProbe q_probe() {
  FunctionProbe p("Q", 1, [](const DecoratedPointCloud& x) {
    return Eigen::VectorXd::Constant(1, pseudoscalar_Q(x));
  });
  p.declared_irreps.emplace("Q", IrrepLabel(0, -1));
  return p;
}

FunctionProbe gyration_probe() {
  FunctionProbe p("y", 1, [](const DecoratedPointCloud& x) {
    return Eigen::VectorXd::Constant(1, x.centered().squaredNorm());
  });
  p.declared_irreps.emplace("y", IrrepLabel(0, 1));
  return p;
}

FunctionProbe constant_vector_probe(const Vec3& c) {
  FunctionProbe p("y", 3, [c](const DecoratedPointCloud&) { return Eigen::VectorXd(c); });
  p.declared_irreps.emplace("y", IrrepLabel(1, 1));
  return p;
}

DecoratedPointCloud chbrclf_geometry() {
  const std::array<Vec3, 4> dirs = {Vec3(1, 1, 1), Vec3(1, -1, -1), Vec3(-1, 1, -1), Vec3(-1, -1, 1)};
  const std::array<double, 4> bonds = {1.09, 1.35, 1.77, 1.94};
  DecoratedPointCloud x(Positions::Zero(5, 3));
  for (int k = 0; k < 4; ++k) x.positions.row(k + 1) = bonds[size_t(k)] * dirs[size_t(k)].normalized().transpose();
  Eigen::MatrixXd species(5, 1);
  species << 6, 1, 9, 17, 35;
  x.scalar_attrs["species"] = species;
  return x;
}

std::vector<Conformer> rattled_conformers(const ConformerSpec& spec) {
  if (spec.rattle_sigma < 0.0) throw InvalidArgument("rattle_sigma must be >= 0");
  if (spec.count < 1) throw InvalidArgument("conformer count must be >= 1");
  spec.base.validate();
  std::vector<Conformer> out;
  out.reserve(size_t(spec.count));
  for (int k = 0; k < spec.count; ++k) {
    std::seed_seq seq{std::uint32_t(spec.seed), std::uint32_t(spec.seed >> 32), std::uint32_t(k)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    DecoratedPointCloud x = spec.base;
    if (spec.rattle_sigma > 0.0) {
      for (Eigen::Index i = 0; i < x.positions.rows(); ++i) {
        for (int c = 0; c < 3; ++c) x.positions(i, c) += spec.rattle_sigma * normal(rng);
      }
    }
    if (spec.random_orientation) {
      x = act(random_group_element(rng, spec.random_parity), x);
    } else if (spec.random_parity && std::bernoulli_distribution(0.5)(rng)) {
      x = act(GroupElement::inversion(), x);
    }
    const double q = pseudoscalar_Q(x);
    x.info["Q"] = q;
    out.push_back({std::move(x), q});
  }
  return out;
}

}  // namespace symprobe
