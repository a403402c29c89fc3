#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "symprobe/errors.hpp"
#include "symprobe/lebedev.hpp"
#include "symprobe/o3.hpp"
#include "symprobe/quadrature.hpp"

using namespace symprobe;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

// Hand-written orthonormal real harmonics r^l Y_lm for l <= 2 (no Condon-Shortley phase).
Eigen::VectorXd reference_l2(const Vec3& r) {
  const double x = r.x(), y = r.y(), z = r.z();
  const double c = 0.5 * std::sqrt(15.0 / kPi);
  Eigen::VectorXd v(5);
  v << c * x * y, c * y * z, 0.25 * std::sqrt(5.0 / kPi) * (3 * z * z - r.squaredNorm()), c * x * z,
      0.5 * c * (x * x - y * y);
  return v;
}

// Oracle for D^l(R): project rotated harmonics back onto the harmonics with a Lebedev rule.
Eigen::MatrixXd wigner_by_projection(int l, const Mat3& rotation) {
  const detail::LebedevTable* table = nullptr;
  for (const auto& t : detail::lebedev_tables())
    if (t.precision >= 2 * l) {
      table = &t;
      break;
    }
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2 * l + 1, 2 * l + 1);
  for (const auto& n : table->nodes) {
    const Vec3 r(n.x, n.y, n.z);
    const Eigen::VectorXd yr = real_solid_harmonics(rotation * r, l)[l];
    const Eigen::VectorXd y0 = real_solid_harmonics(r, l)[l];
    d += 4.0 * kPi * n.weight * yr * y0.transpose();
  }
  return d;
}

}  // namespace

TEST(IrrepLabel, DimensionAndValidation) {
  EXPECT_EQ(IrrepLabel(0, 1).dim(), 1);
  EXPECT_EQ(IrrepLabel(3, -1).dim(), 7);
  EXPECT_THROW(IrrepLabel(-1, 1), InvalidArgument);
  EXPECT_THROW(IrrepLabel(1, 0), InvalidArgument);
  EXPECT_THROW(IrrepLabel(1, 2), InvalidArgument);
}

TEST(IrrepLabel, ParseAndFormat) {
  EXPECT_EQ(IrrepLabel::parse("2,+1"), IrrepLabel(2, 1));
  EXPECT_EQ(IrrepLabel::parse("(1,-1)"), IrrepLabel(1, -1));
  EXPECT_EQ(IrrepLabel::parse("0 1"), IrrepLabel(0, 1));
  EXPECT_EQ(IrrepLabel(1, -1).to_string(), "(1,-1)");
  EXPECT_THROW(IrrepLabel::parse("vector"), InvalidArgument);
  EXPECT_THROW(IrrepLabel::parse("1,+1,3"), InvalidArgument);
}

TEST(GroupElement, RejectsNonRotations) {
  Mat3 reflection = Mat3::Identity();
  reflection(2, 2) = -1.0;
  EXPECT_THROW(GroupElement::from_rotation(reflection), InvalidArgument);
  EXPECT_THROW(GroupElement::from_rotation(2.0 * Mat3::Identity()), InvalidArgument);
}

TEST(GroupElement, CompositionActsLikeMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_group_element(rng, true);
    const auto h = random_group_element(rng, true);
    const auto k = random_group_element(rng, true);
    const Vec3 v = Vec3::Random();
    EXPECT_LT(((g * h).apply(v) - g.apply(h.apply(v))).norm(), 1e-12);
    EXPECT_LT(max_abs(((g * h) * k).matrix() - (g * (h * k)).matrix()), 1e-12);
    EXPECT_LT(max_abs((g * g.inverse()).matrix() - Mat3::Identity()), 1e-12);
    const Mat3 r = g.rotation();
    EXPECT_LT(max_abs(r.transpose() * r - Mat3::Identity()), 1e-12);
    EXPECT_NEAR(r.determinant(), 1.0, 1e-12);
  }
}

TEST(WignerD, ScalarIsTrivial) {
  std::mt19937_64 rng(1);
  const auto g = random_group_element(rng, true);
  const auto d = wigner_d(IrrepLabel(0, 1), g);
  ASSERT_EQ(d.matrix.rows(), 1);
  EXPECT_DOUBLE_EQ(d.matrix(0, 0), 1.0);
}

TEST(WignerD, VectorIsPermutedRotation) {
  std::mt19937_64 rng(2);
  const auto g = random_group_element(rng, false);
  const auto d = wigner_d(IrrepLabel(1, 1), g);
  const Mat3& r = g.rotation();
  const int p[3] = {1, 2, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_DOUBLE_EQ(d.matrix(i, j), r(p[i], p[j]));
}

TEST(WignerD, InversionActsAsParityLabel) {
  const auto inv = GroupElement::inversion();
  EXPECT_LT(max_abs(wigner_d(IrrepLabel(1, 1), inv).matrix + Eigen::MatrixXd::Identity(3, 3)), 1e-15);
  EXPECT_LT(max_abs(wigner_d(IrrepLabel(1, -1), inv).matrix - Eigen::MatrixXd::Identity(3, 3)), 1e-15);
}

TEST(WignerD, MatchesLebedevProjectionOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_group_element(rng, false);
    const auto blocks = wigner_d_blocks(8, g.rotation());
    for (int l = 0; l <= 8; ++l) {
      EXPECT_LT(max_abs(blocks[l] - wigner_by_projection(l, g.rotation())), 1e-12) << "l=" << l;
    }
  }
}

TEST(WignerD, HomomorphismOrthogonalityAndCharacter) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_group_element(rng, true);
    const auto h = random_group_element(rng, true);
    for (int l = 0; l <= 8; ++l) {
      for (int sigma : {1, -1}) {
        const IrrepLabel a(l, sigma);
        const auto dg = wigner_d(a, g).matrix;
        const auto dh = wigner_d(a, h).matrix;
        const auto dgh = wigner_d(a, g * h).matrix;
        ASSERT_EQ(dg.rows(), a.dim());
        EXPECT_LT(max_abs(dg * dh - dgh), 1e-10);
        EXPECT_LT(max_abs(dg.transpose() * dg - Eigen::MatrixXd::Identity(a.dim(), a.dim())), 1e-10);
        EXPECT_NEAR(dg.trace(), character(a, g), 1e-10);
      }
    }
  }
}

TEST(Character, KnownValues) {
  std::mt19937_64 rng(5);
  const auto g = random_group_element(rng, false);
  EXPECT_DOUBLE_EQ(character(IrrepLabel(0, 1), g), 1.0);
  const auto half_turn = GroupElement::from_axis_angle(Vec3(0.3, -1.0, 2.0), kPi);
  EXPECT_NEAR(character(IrrepLabel(1, 1), half_turn), -1.0, 1e-12);
  EXPECT_DOUBLE_EQ(character(IrrepLabel(2, 1), GroupElement::identity()), 5.0);
  EXPECT_DOUBLE_EQ(character(IrrepLabel(2, -1), GroupElement::inversion()), -5.0);
}

TEST(Character, SmallAnglesStayFinite) {
  for (double w : {0.0, 1e-300, 1e-12, 1e-7, kPi - 1e-12, kPi}) {
    const auto g = GroupElement::from_axis_angle(Vec3::UnitZ(), w);
    for (int l = 0; l <= 6; ++l) {
      const double expected = std::abs(std::sin(w / 2)) > 1e-3
                                  ? std::sin((2 * l + 1) * w / 2) / std::sin(w / 2)
                                  : double(2 * l + 1);
      EXPECT_NEAR(character(IrrepLabel(l, 1), g), expected, 1e-6) << "w=" << w << " l=" << l;
    }
  }
}

TEST(SolidHarmonics, OriginHasOnlyConstant) {
  const auto blocks = real_solid_harmonics(Vec3::Zero(), 2);
  EXPECT_DOUBLE_EQ(blocks[0](0), 0.5 / std::sqrt(kPi));
  EXPECT_EQ(blocks[1].norm(), 0.0);
  EXPECT_EQ(blocks[2].norm(), 0.0);
}

TEST(SolidHarmonics, LowOrderClosedForms) {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> n;
  for (int trial = 0; trial < 50; ++trial) {
    const Vec3 r(n(rng), n(rng), n(rng));
    const auto blocks = real_solid_harmonics(r, 2);
    const double c1 = std::sqrt(3.0 / (4.0 * kPi));
    EXPECT_LT((blocks[1] - c1 * Vec3(r.y(), r.z(), r.x())).norm(), 1e-14);
    EXPECT_LT((blocks[2] - reference_l2(r)).norm(), 1e-13);
    // |l=1 block| = sqrt(3 / (4 pi)) |r| for the orthonormal convention.
    EXPECT_NEAR(blocks[1].norm(), c1 * r.norm(), 1e-14);
  }
}

TEST(SolidHarmonics, Covariance) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> n;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_group_element(rng, false);
    const Vec3 r(n(rng), n(rng), n(rng));
    const auto before = real_solid_harmonics(r, 8);
    const auto after = real_solid_harmonics(g.rotation() * r, 8);
    for (int l = 0; l <= 8; ++l) {
      const auto d = wigner_d(IrrepLabel(l, 1), g).matrix;
      EXPECT_LT((after[l] - d * before[l]).cwiseAbs().maxCoeff(), 1e-10 * std::max(1.0, after[l].norm()));
    }
  }
}

TEST(SolidHarmonics, OrthonormalOnSphere) {
  const auto& table = detail::lebedev_tables().back();
  const int lmax = table.precision / 2;
  const int n = (lmax + 1) * (lmax + 1);
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(n, n);
  for (const auto& node : table.nodes) {
    const auto y = real_solid_harmonics_flat(Vec3(node.x, node.y, node.z), lmax);
    gram += 4.0 * kPi * node.weight * y * y.transpose();
  }
  EXPECT_LT(max_abs(gram - Eigen::MatrixXd::Identity(n, n)), 1e-12);
}

TEST(Rank2, IdentityAndTraceless) {
  const auto id = cartesian_rank2_to_spherical(Mat3::Identity());
  EXPECT_NEAR(id.scalar, std::sqrt(3.0), 1e-15);
  EXPECT_LT(id.l2.norm(), 1e-15);
  const auto tl = cartesian_rank2_to_spherical(Eigen::Vector3d(1, -1, 0).asDiagonal().toDenseMatrix());
  EXPECT_NEAR(tl.scalar, 0.0, 1e-15);
}

TEST(Rank2, RejectsAsymmetric) {
  Mat3 t = Mat3::Identity();
  t(0, 1) = 1e-3;
  EXPECT_THROW(cartesian_rank2_to_spherical(t), InvalidArgument);
}

TEST(Rank2, RoundTripAndRotation) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    Mat3 a = Mat3::Random();
    const Mat3 t = a + a.transpose();
    const auto parts = cartesian_rank2_to_spherical(t);
    EXPECT_LT(max_abs(spherical_to_cartesian_rank2(parts) - t), 1e-12);
    EXPECT_NEAR(parts.scalar * parts.scalar + parts.l2.squaredNorm(), t.squaredNorm(), 1e-12);

    const auto g = random_group_element(rng, false);
    const Mat3 rotated = g.rotation() * t * g.rotation().transpose();
    const auto rparts = cartesian_rank2_to_spherical(rotated);
    EXPECT_NEAR(rparts.scalar, parts.scalar, 1e-12);
    const Eigen::VectorXd expect = wigner_d(IrrepLabel(2, 1), g).matrix * parts.l2;
    EXPECT_LT((rparts.l2 - expect).cwiseAbs().maxCoeff(), 1e-12);
  }
}
