#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "symprobe/errors.hpp"
#include "symprobe/pointcloud.hpp"
#include "symprobe/quadrature.hpp"

using namespace symprobe;

namespace {

DecoratedPointCloud random_cloud(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> normal;
  Positions p(n, 3);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < 3; ++k) p(i, k) = 2.0 * normal(rng) + 5.0;
  }
  DecoratedPointCloud x(p);
  x.scalar_attrs["species"] = Eigen::MatrixXd::Constant(n, 1, 6.0);
  Positions v(n, 3);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < 3; ++k) v(i, k) = normal(rng);
  }
  x.vector_attrs["force"] = v;
  return x;
}

}  // namespace

TEST(Act, IdentityIsBitExact) {
  std::mt19937_64 rng(1);
  auto x = random_cloud(rng, 7);
  auto y = act(GroupElement::identity(), x);
  EXPECT_TRUE((y.positions.array() == x.positions.array()).all());
  EXPECT_TRUE((y.vector_attrs["force"].array() == x.vector_attrs["force"].array()).all());
}

TEST(Act, InversionAboutCentroid) {
  // A single point is its own centroid and stays put.
  DecoratedPointCloud single(Positions(1, 3));
  single.positions << 1.0, 0.0, 0.0;
  EXPECT_EQ(act(GroupElement::inversion(), single).positions(0, 0), 1.0);

  DecoratedPointCloud pair(Positions(2, 3));
  pair.positions << 1.0, 0.0, 0.0, -1.0, 0.0, 0.0;
  auto y = act(GroupElement::inversion(), pair);
  EXPECT_DOUBLE_EQ(y.positions(0, 0), -1.0);
  EXPECT_DOUBLE_EQ(y.positions(1, 0), 1.0);
  EXPECT_EQ(y.positions(0, 1), 0.0);
}

TEST(Act, PreservesDistancesAndScalars) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = random_cloud(rng, 6);
    auto g = random_group_element(rng, true);
    auto y = act(g, x);
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        double a = (x.positions.row(i) - x.positions.row(j)).norm();
        double b = (y.positions.row(i) - y.positions.row(j)).norm();
        EXPECT_NEAR(a, b, 1e-12);
      }
    }
    EXPECT_TRUE((y.scalar_attrs["species"].array() == x.scalar_attrs["species"].array()).all());
    EXPECT_LT((y.centroid() - x.centroid()).norm(), 1e-12);
  }
}

TEST(Act, Composition) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = random_cloud(rng, 5);
    auto g = random_group_element(rng, true);
    auto h = random_group_element(rng, true);
    auto lhs = act(g, act(h, x));
    auto rhs = act(g * h, x);
    EXPECT_LT((lhs.positions - rhs.positions).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((lhs.vector_attrs["force"] - rhs.vector_attrs["force"]).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Act, RotatesCell) {
  DecoratedPointCloud x(Positions::Zero(1, 3));
  x.cell = Mat3::Identity() * 4.0;
  auto g = GroupElement::from_axis_angle(Vec3::UnitZ(), M_PI / 2);
  auto y = act(g, x);
  EXPECT_NEAR((*y.cell)(0, 1), 4.0, 1e-12);
  EXPECT_NEAR((*y.cell)(1, 0), -4.0, 1e-12);
}

TEST(Edges, CutoffExamples) {
  DecoratedPointCloud x(Positions(2, 3));
  x.positions << 0.0, 0.0, 0.0, 3.0, 0.0, 0.0;
  auto e = pairwise_edges(x, 4.5);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0].i, 0);
  EXPECT_EQ(e[0].j, 1);
  EXPECT_DOUBLE_EQ(e[0].vec.x(), 3.0);
  EXPECT_DOUBLE_EQ(e[1].vec.x(), -3.0);
  EXPECT_DOUBLE_EQ(e[1].norm, 3.0);
  EXPECT_TRUE(pairwise_edges(x, 2.0).empty());
}

TEST(Edges, CoincidentPointsNamed) {
  DecoratedPointCloud x(Positions(3, 3));
  x.positions << 0, 0, 0, 1, 0, 0, 1, 0, 0;
  try {
    pairwise_edges(x, 5.0);
    FAIL();
  } catch (const InvalidArgument& err) {
    EXPECT_NE(std::string(err.what()).find("1 and 2"), std::string::npos);
  }
  EXPECT_THROW(pairwise_edges(x, 0.0), InvalidArgument);
}

TEST(Edges, CommuteWithAction) {
  std::mt19937_64 rng(4);
  auto x = random_cloud(rng, 8);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = random_group_element(rng, true);
    auto e0 = pairwise_edges(x, 3.0);
    auto e1 = pairwise_edges(act(g, x), 3.0);
    // Borderline distances could cross the cutoff by round-off; none here are that close.
    ASSERT_EQ(e0.size(), e1.size());
    for (size_t k = 0; k < e0.size(); ++k) {
      EXPECT_EQ(e0[k].i, e1[k].i);
      EXPECT_EQ(e0[k].j, e1[k].j);
      EXPECT_LT((g.apply(e0[k].vec) - e1[k].vec).norm(), 1e-12);
    }
  }
}

TEST(Edges, MinimumImageOrthorhombic) {
  DecoratedPointCloud x(Positions(2, 3));
  x.positions << 0.5, 0, 0, 9.5, 0, 0;
  x.cell = Eigen::Vector3d(10.0, 12.0, 14.0).asDiagonal();
  x.periodic = true;
  auto e = pairwise_edges(x, 2.0);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_NEAR(e[0].vec.x(), -1.0, 1e-12);
  EXPECT_THROW(pairwise_edges(x, 6.0), InvalidArgument);

  Mat3 skew;
  skew << 10, 0, 0, 3, 10, 0, 0, 0, 10;
  x.cell = skew;
  EXPECT_THROW(pairwise_edges(x, 2.0), InvalidArgument);
}

TEST(Xyz, RoundTripIsExact) {
  std::mt19937_64 rng(5);
  auto x = random_cloud(rng, 5);
  x.scalar_attrs["species"] << 1, 6, 9, 17, 35;
  x.scalar_attrs["charge"] = Eigen::MatrixXd::Random(5, 1) / 3.0;
  x.info["Q"] = -0.123456789012345678;
  x.cell = Mat3::Identity() * 20.0;
  std::stringstream ss;
  write_xyz(ss, {x, x});
  auto back = read_xyz(ss);
  ASSERT_EQ(back.size(), 2u);
  const auto& y = back[1];
  EXPECT_TRUE((y.positions.array() == x.positions.array()).all());
  EXPECT_TRUE((y.scalar_attrs.at("species").array() == x.scalar_attrs.at("species").array()).all());
  EXPECT_TRUE((y.scalar_attrs.at("charge").array() == x.scalar_attrs.at("charge").array()).all());
  EXPECT_TRUE((y.vector_attrs.at("force").array() == x.vector_attrs.at("force").array()).all());
  EXPECT_EQ(y.info.at("Q"), x.info.at("Q"));
  ASSERT_TRUE(y.cell.has_value());
  EXPECT_EQ((*y.cell)(2, 2), 20.0);
  EXPECT_FALSE(y.periodic);
}

TEST(Xyz, EmptyInput) {
  std::stringstream ss("");
  EXPECT_TRUE(read_xyz(ss).empty());
  std::stringstream blank("\n\n");
  EXPECT_TRUE(read_xyz(blank).empty());
}

TEST(Xyz, VectorColumnRotates) {
  std::stringstream ss(
      "2\n"
      "Properties=species:S:1:pos:R:3:dipole:R:3 energy=-1.5\n"
      "H 0 0 0 1 0 0\n"
      "Cl 1.3 0 0 0 2 0\n");
  auto clouds = read_xyz(ss);
  ASSERT_EQ(clouds.size(), 1u);
  const auto& x = clouds[0];
  EXPECT_EQ(x.scalar_attrs.at("species")(1, 0), 17.0);
  EXPECT_EQ(x.info.at("energy"), -1.5);
  ASSERT_EQ(x.vector_attrs.count("dipole"), 1u);
  auto g = GroupElement::from_axis_angle(Vec3(1, 1, 0).normalized(), 0.7, true);
  auto y = act(g, x);
  for (int i = 0; i < 2; ++i) {
    Vec3 expected = g.matrix() * x.vector_attrs.at("dipole").row(i).transpose();
    EXPECT_LT((y.vector_attrs.at("dipole").row(i).transpose() - expected).norm(), 1e-12);
  }
}

TEST(Xyz, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    std::stringstream ss(text);
    try {
      read_xyz(ss);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1L;
  };
  EXPECT_EQ(line_of("abc\n"), 1);
  EXPECT_EQ(line_of("2\nProperties=species:S:1:pos:R:3\nH 0 0 0\nH 0 0 x\n"), 4);
  EXPECT_EQ(line_of("1\nProperties=species:S:1:pos:R:3\nQq 0 0 0\n"), 3);
  EXPECT_EQ(line_of("3\nProperties=species:S:1:pos:R:3\nH 0 0 0\n"), 4);
  EXPECT_EQ(line_of("1\nProperties=species:S:1\nH\n"), 2);
  EXPECT_EQ(line_of("1\nLattice=\"1 0 0\" Properties=species:S:1:pos:R:3\nH 0 0 0\n"), 2);
}

TEST(PeriodicTable, Lookup) {
  EXPECT_EQ(atomic_number("Br"), 35);
  EXPECT_EQ(atomic_number("Og"), 118);
  EXPECT_EQ(atomic_number("Zz"), 0);
  EXPECT_EQ(element_symbol(9), "F");
  EXPECT_THROW(element_symbol(0), InvalidArgument);
}
