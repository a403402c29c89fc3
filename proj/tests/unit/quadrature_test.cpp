#include <cmath>
#include <random>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "symprobe/errors.hpp"
#include "symprobe/quadrature.hpp"

using namespace symprobe;

namespace {

double weight_sum(const O3Grid& g) {
  double s = 0.0;
  for (double w : g.weights()) s += w;
  return s;
}

// Random band-limited function on O(3): random combination of D^l entries, l <= band.
struct BandLimitedFunction {
  int band;
  std::vector<Eigen::MatrixXd> coeff_even;
  std::vector<Eigen::MatrixXd> coeff_odd;

  BandLimitedFunction(int band_limit, std::mt19937_64& rng) : band(band_limit) {
    std::normal_distribution<double> n;
    for (int l = 0; l <= band; ++l) {
      Eigen::MatrixXd a(2 * l + 1, 2 * l + 1), b(2 * l + 1, 2 * l + 1);
      for (int i = 0; i < a.size(); ++i) {
        a.data()[i] = n(rng);
        b.data()[i] = n(rng);
      }
      coeff_even.push_back(a);
      coeff_odd.push_back(b);
    }
  }

  double operator()(const GroupElement& g) const {
    const auto d = wigner_d_blocks(band, g.rotation());
    double v = 0.0;
    for (int l = 0; l <= band; ++l) {
      v += (coeff_even[l].array() * d[l].array()).sum();
      v += (g.parity() ? -1.0 : 1.0) * (coeff_odd[l].array() * d[l].array()).sum();
    }
    return v;
  }
};

}  // namespace

TEST(BuildGrid, BandZeroIsIdentity) {
  const auto grid = build_so3_grid(0);
  ASSERT_EQ(grid.size(), 1u);
  EXPECT_TRUE(grid.nodes()[0].is_identity());
  EXPECT_EQ(grid.weights()[0], 1.0);
  EXPECT_NEAR(haar_average_scalar(grid, [](const GroupElement& g) { return wigner_d(IrrepLabel(0, 1), g).matrix(0, 0); }),
              1.0, 1e-15);
}

TEST(BuildGrid, OrthogonalityAtBandFour) {
  for (auto scheme : {GridScheme::lebedev_trapezoid, GridScheme::gauss_product}) {
    const auto grid = build_so3_grid(4, scheme);
    EXPECT_NEAR(weight_sum(grid), 1.0, 1e-12);
    EXPECT_LE(orthogonality_residual(grid, 4), 1e-10) << to_string(scheme);
    RecordProperty(to_string(scheme) + "_nodes", int(grid.size()));
  }
}

TEST(BuildGrid, CharacterOrthogonalityWithTrivialIrrep) {
  const auto grid = build_so3_grid(6);
  for (int l = 0; l <= 6; ++l) {
    const double avg = haar_average_scalar(grid, [&](const GroupElement& g) { return character(IrrepLabel(l, 1), g); });
    EXPECT_NEAR(avg, l == 0 ? 1.0 : 0.0, 1e-10);
  }
}

TEST(BuildGrid, CapacityErrorNamesMaximum) {
  const int max_band = max_lebedev_band_limit();
  EXPECT_NO_THROW(build_so3_grid(max_band));
  try {
    build_so3_grid(max_band + 1);
    FAIL() << "expected CapacityError";
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find(std::to_string(max_band)), std::string::npos);
  }
  // The Gauss product scheme has no table limit.
  EXPECT_NO_THROW(build_so3_grid(max_band + 1, GridScheme::gauss_product));
}

TEST(BuildGrid, NegativeBandRejected) { EXPECT_THROW(build_so3_grid(-1), InvalidArgument); }

TEST(ExtendToO3, DoublesNodesAndKillsPseudoscalar) {
  const auto so3 = build_so3_grid(3);
  const auto o3 = extend_to_o3(so3);
  EXPECT_EQ(o3.size(), 2 * so3.size());
  EXPECT_TRUE(o3.covers_parity());
  EXPECT_NEAR(weight_sum(o3), 1.0, 1e-12);
  EXPECT_NEAR(haar_average_scalar(o3, [](const GroupElement& g) { return g.det(); }), 0.0, 1e-14);
  EXPECT_LE(orthogonality_residual(o3, 3), 1e-10);
  EXPECT_THROW(extend_to_o3(o3), InvalidArgument);
}

TEST(HaarAverage, KnownAverages) {
  const auto grid = build_o3_grid(4);
  const Eigen::Vector3d c(1.5, -2.0, 0.25);
  EXPECT_LT((haar_average(grid, [&](const GroupElement&) -> Eigen::VectorXd { return c; }) - c).norm(), 1e-12);
  EXPECT_NEAR(haar_average_scalar(grid, [](const GroupElement& g) { return wigner_d(IrrepLabel(1, 1), g).matrix(1, 1); }),
              0.0, 1e-10);
  EXPECT_NEAR(haar_average_scalar(grid,
                                  [](const GroupElement& g) {
                                    const double chi = character(IrrepLabel(2, 1), g);
                                    return chi * chi;
                                  }),
              1.0, 1e-10);
}

TEST(HaarAverage, LeftInvarianceAtBandLimit) {
  std::mt19937_64 rng(11);
  const auto grid = build_o3_grid(4);
  for (int trial = 0; trial < 5; ++trial) {
    const BandLimitedFunction f(4, rng);
    const double base = haar_average_scalar(grid, f);
    for (std::size_t k : {std::size_t(3), grid.size() / 2 + 17, grid.size() - 1}) {
      const auto& h = grid.nodes()[k];
      const double shifted = haar_average_scalar(grid, [&](const GroupElement& g) { return f(h * g); });
      EXPECT_NEAR(shifted, base, 1e-10);
    }
  }
}

TEST(HaarAverage, SchemesAgreeOnBandLimitedFunctions) {
  std::mt19937_64 rng(12);
  const auto leb = build_o3_grid(5, GridScheme::lebedev_trapezoid);
  const auto gauss = build_o3_grid(5, GridScheme::gauss_product);
  for (int trial = 0; trial < 5; ++trial) {
    const BandLimitedFunction f(5, rng);
    const BandLimitedFunction h(5, rng);
    auto product = [&](const GroupElement& g) { return f(g) * h(g); };
    EXPECT_NEAR(haar_average_scalar(leb, f), haar_average_scalar(gauss, f), 1e-10);
    EXPECT_NEAR(haar_average_scalar(leb, product), haar_average_scalar(gauss, product), 1e-10);
  }
}

TEST(RandomGroupElement, HaarMomentsAndParityRate) {
  std::mt19937_64 rng(13);
  constexpr int kDraws = 100000;
  Mat3 sum = Mat3::Zero();
  Mat3 sum_sq = Mat3::Zero();
  int improper = 0;
  for (int i = 0; i < kDraws; ++i) {
    const auto g = random_group_element(rng, true);
    EXPECT_NEAR(g.quaternion().norm(), 1.0, 1e-12);
    sum += g.rotation();
    sum_sq += g.rotation().cwiseAbs2();
    improper += g.parity() ? 1 : 0;
  }
  // Each entry of a Haar rotation has mean 0 and variance 1/3.
  const Mat3 mean = sum / kDraws;
  const double stderr_entry = std::sqrt(1.0 / 3.0 / kDraws);
  EXPECT_LT(mean.cwiseAbs().maxCoeff(), 3.0 * stderr_entry);
  EXPECT_NEAR((sum_sq / kDraws).mean(), 1.0 / 3.0, 0.01);
  const double frac = double(improper) / kDraws;
  EXPECT_NEAR(frac, 0.5, 3.0 * std::sqrt(0.25 / kDraws));
}

TEST(GridJson, RoundTripPreservesAverages) {
  const auto grid = build_o3_grid(3);
  const auto doc = grid_to_json(grid);
  const auto back = grid_from_json(nlohmann::json::parse(doc.dump()));
  ASSERT_EQ(back.size(), grid.size());
  EXPECT_TRUE(back.covers_parity());
  EXPECT_EQ(back.band_limit(), 3);
  EXPECT_LE(orthogonality_residual(back, 3), 1e-10);
  EXPECT_THROW(grid_from_json(nlohmann::json{{"format", "other"}}), InvalidArgument);
}
