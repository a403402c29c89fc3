#include "symprobe/o3.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "symprobe/errors.hpp"

namespace symprobe {

IrrepLabel::IrrepLabel(int lambda, int sigma) : lambda_(lambda), sigma_(sigma) {
  if (lambda < 0) throw InvalidArgument(fmt::format("irrep angular order must be >= 0, got {}", lambda));
  if (sigma != 1 && sigma != -1) throw InvalidArgument(fmt::format("irrep parity must be +1 or -1, got {}", sigma));
}

std::string IrrepLabel::to_string() const {
  return fmt::format("({},{})", lambda_, sigma_ > 0 ? "+1" : "-1");
}

IrrepLabel IrrepLabel::parse(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '(' || c == ')') continue;
    cleaned.push_back(c == ',' ? ' ' : c);
  }
  int lambda = 0;
  int sigma = 0;
  char trailing = 0;
  // sscanf accepts a leading '+' on the parity.
  if (std::sscanf(cleaned.c_str(), "%d %d %c", &lambda, &sigma, &trailing) != 2) {
    throw InvalidArgument(fmt::format("cannot parse irrep label '{}' (expected e.g. 1,+1)", text));
  }
  return {lambda, sigma};
}

double inversion_sign(const IrrepLabel& label) {
  const int s = (label.lambda() % 2 == 0) ? label.sigma() : -label.sigma();
  return double(s);
}

std::vector<IrrepLabel> all_labels(int lambda_max) {
  std::vector<IrrepLabel> out;
  for (int l = 0; l <= lambda_max; ++l) {
    out.emplace_back(l, 1);
    out.emplace_back(l, -1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement GroupElement::from_rotation(const Mat3& rotation, bool parity) {
  const double ortho = (rotation.transpose() * rotation - Mat3::Identity()).cwiseAbs().maxCoeff();
  const double det = rotation.determinant();
  if (!(ortho <= 1e-12) || !(std::abs(det - 1.0) <= 1e-12)) {
    throw InvalidArgument(fmt::format(
        "rotation must be orthogonal with determinant +1 (|R^T R - I| = {:.3g}, det = {:.17g})", ortho, det));
  }
  return GroupElement(rotation, parity);
}

GroupElement GroupElement::from_quaternion(const Eigen::Quaterniond& q, bool parity) {
  const double norm = q.norm();
  if (!(norm > 0.0)) throw InvalidArgument("zero quaternion does not define a rotation");
  return GroupElement(q.normalized().toRotationMatrix(), parity);
}

GroupElement GroupElement::from_axis_angle(const Vec3& axis, double angle, bool parity) {
  if (!(axis.norm() > 0.0)) throw InvalidArgument("rotation axis must be non-zero");
  return GroupElement(Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix(), parity);
}

GroupElement GroupElement::from_euler_zyz(double alpha, double beta, double gamma, bool parity) {
  const Mat3 r = (Eigen::AngleAxisd(alpha, Vec3::UnitZ()) * Eigen::AngleAxisd(beta, Vec3::UnitY()) *
                  Eigen::AngleAxisd(gamma, Vec3::UnitZ()))
                     .toRotationMatrix();
  return GroupElement(r, parity);
}

Eigen::Quaterniond GroupElement::quaternion() const {
  Eigen::Quaterniond q(rotation_);
  // Canonical hemisphere so exported grids are reproducible.
  if (q.w() < 0.0 || (q.w() == 0.0 && q.vec()[0] < 0.0)) q.coeffs() *= -1.0;
  return q;
}

double GroupElement::rotation_angle() const {
  const double c = std::clamp((rotation_.trace() - 1.0) / 2.0, -1.0, 1.0);
  return std::acos(c);
}

bool GroupElement::is_identity() const {
  return !parity_ && rotation_ == Mat3::Identity();
}

GroupElement GroupElement::inverse() const { return GroupElement(rotation_.transpose(), parity_); }

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  return GroupElement(g.rotation_ * h.rotation_, g.parity_ != h.parity_);
}

// ---------------------------------------------------------------------------
// Real Wigner-D matrices, Ivanic-Ruedenberg recursion.

namespace {

class IvanicRuedenberg {
 public:
  IvanicRuedenberg(const Eigen::MatrixXd& r1, const Eigen::MatrixXd& prev, int l)
      : r1_(r1), prev_(prev), l_(l) {}

  double element(int m, int n) const {
    const int am = std::abs(m);
    const double d = m == 0 ? 1.0 : 0.0;
    const double denom = std::abs(n) == l_ ? double(2 * l_ * (2 * l_ - 1)) : double((l_ + n) * (l_ - n));
    const double u = std::sqrt(double((l_ + m) * (l_ - m)) / denom);
    const double v = 0.5 * std::sqrt((1.0 + d) * double((l_ + am - 1) * (l_ + am)) / denom) * (1.0 - 2.0 * d);
    const double w = -0.5 * std::sqrt(double((l_ - am - 1) * (l_ - am)) / denom) * (1.0 - d);
    double value = 0.0;
    if (u != 0.0) value += u * U(m, n);
    if (v != 0.0) value += v * V(m, n);
    if (w != 0.0) value += w * W(m, n);
    return value;
  }

 private:
  double r1(int i, int j) const { return r1_(i + 1, j + 1); }
  double prev(int i, int j) const { return prev_(i + l_ - 1, j + l_ - 1); }

  double P(int i, int a, int b) const {
    if (b == l_) return r1(i, 1) * prev(a, l_ - 1) - r1(i, -1) * prev(a, -l_ + 1);
    if (b == -l_) return r1(i, 1) * prev(a, -l_ + 1) + r1(i, -1) * prev(a, l_ - 1);
    return r1(i, 0) * prev(a, b);
  }

  double U(int m, int n) const { return P(0, m, n); }

  double V(int m, int n) const {
    if (m == 0) return P(1, 1, n) + P(-1, -1, n);
    if (m > 0) {
      const double d = m == 1 ? 1.0 : 0.0;
      const double a = P(1, m - 1, n) * std::sqrt(1.0 + d);
      return d != 0.0 ? a : a - P(-1, -m + 1, n);
    }
    const double d = m == -1 ? 1.0 : 0.0;
    const double b = P(-1, -m - 1, n) * std::sqrt(1.0 + d);
    return d != 0.0 ? b : b + P(1, m + 1, n);
  }

  double W(int m, int n) const {
    if (m > 0) return P(1, m + 1, n) + P(-1, -m - 1, n);
    return P(1, m - 1, n) - P(-1, -m + 1, n);
  }

  const Eigen::MatrixXd& r1_;
  const Eigen::MatrixXd& prev_;
  int l_;
};

}  // namespace

std::vector<Eigen::MatrixXd> wigner_d_blocks(int lambda_max, const Mat3& r) {
  if (lambda_max < 0) throw InvalidArgument("lambda_max must be >= 0");
  std::vector<Eigen::MatrixXd> blocks;
  blocks.reserve(lambda_max + 1);
  blocks.push_back(Eigen::MatrixXd::Ones(1, 1));
  if (lambda_max == 0) return blocks;

  // Real-SH order (y, z, x).
  constexpr int perm[3] = {1, 2, 0};
  Eigen::MatrixXd r1(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r1(i, j) = r(perm[i], perm[j]);
  blocks.push_back(r1);

  for (int l = 2; l <= lambda_max; ++l) {
    Eigen::MatrixXd dl(2 * l + 1, 2 * l + 1);
    const IvanicRuedenberg rec(blocks[1], blocks[l - 1], l);
    for (int m = -l; m <= l; ++m)
      for (int n = -l; n <= l; ++n) dl(m + l, n + l) = rec.element(m, n);
    blocks.push_back(std::move(dl));
  }
  return blocks;
}

WignerBlock wigner_d(const IrrepLabel& label, const GroupElement& g) {
  auto blocks = wigner_d_blocks(label.lambda(), g.rotation());
  Eigen::MatrixXd m = std::move(blocks.back());
  if (g.parity()) m *= inversion_sign(label);
  return {label, std::move(m)};
}

double character(const IrrepLabel& label, const GroupElement& g) {
  const double omega = g.rotation_angle();
  // sin((2l+1)w/2) / sin(w/2) written as a cosine sum: no singular points.
  double chi = 1.0;
  for (int k = 1; k <= label.lambda(); ++k) chi += 2.0 * std::cos(k * omega);
  return g.parity() ? inversion_sign(label) * chi : chi;
}

// ---------------------------------------------------------------------------
// Solid harmonics

std::vector<Eigen::VectorXd> real_solid_harmonics(const Vec3& r, int lambda_max) {
  if (lambda_max < 0) throw InvalidArgument("lambda_max must be >= 0");
  const double x = r.x(), y = r.y(), z = r.z();
  const double r2 = r.squaredNorm();
  const int L = lambda_max;

  // A_m + i B_m = (x + i y)^m
  std::vector<double> A(L + 1), B(L + 1);
  A[0] = 1.0;
  B[0] = 0.0;
  for (int m = 1; m <= L; ++m) {
    A[m] = x * A[m - 1] - y * B[m - 1];
    B[m] = x * B[m - 1] + y * A[m - 1];
  }

  // Pi[l][m]: z- and r^2-dependent factor of r^l P_l^m, without the Condon-Shortley phase.
  std::vector<std::vector<double>> Pi(L + 1, std::vector<double>(L + 1, 0.0));
  double dfact = 1.0;  // (2m-1)!!
  for (int m = 0; m <= L; ++m) {
    if (m > 0) dfact *= double(2 * m - 1);
    Pi[m][m] = dfact;
    if (m + 1 <= L) Pi[m + 1][m] = double(2 * m + 1) * z * dfact;
    for (int l = m + 2; l <= L; ++l) {
      Pi[l][m] = (double(2 * l - 1) * z * Pi[l - 1][m] - double(l + m - 1) * r2 * Pi[l - 2][m]) / double(l - m);
    }
  }

  std::vector<Eigen::VectorXd> blocks;
  blocks.reserve(L + 1);
  for (int l = 0; l <= L; ++l) {
    Eigen::VectorXd b(2 * l + 1);
    const double base = std::sqrt(double(2 * l + 1) / (4.0 * std::numbers::pi));
    b(l) = base * Pi[l][0];
    double ratio = 1.0;  // (l-m)!/(l+m)!
    for (int m = 1; m <= l; ++m) {
      ratio /= double(l + m) * double(l - m + 1);
      const double norm = std::numbers::sqrt2 * base * std::sqrt(ratio);
      b(l + m) = norm * Pi[l][m] * A[m];
      b(l - m) = norm * Pi[l][m] * B[m];
    }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

Eigen::VectorXd real_solid_harmonics_flat(const Vec3& r, int lambda_max) {
  const auto blocks = real_solid_harmonics(r, lambda_max);
  Eigen::VectorXd out((lambda_max + 1) * (lambda_max + 1));
  Eigen::Index offset = 0;
  for (const auto& b : blocks) {
    out.segment(offset, b.size()) = b;
    offset += b.size();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rank-2 tensors

namespace {

// Frobenius-orthonormal traceless symmetric basis in real-SH order mu = -2..2.
const std::array<Mat3, 5>& l2_basis() {
  static const std::array<Mat3, 5> basis = [] {
    const double s2 = 1.0 / std::numbers::sqrt2;
    const double s6 = 1.0 / std::sqrt(6.0);
    std::array<Mat3, 5> b;
    b[0] << 0, s2, 0, s2, 0, 0, 0, 0, 0;              // xy
    b[1] << 0, 0, 0, 0, 0, s2, 0, s2, 0;              // yz
    b[2] << -s6, 0, 0, 0, -s6, 0, 0, 0, 2 * s6;       // 3z^2 - r^2
    b[3] << 0, 0, s2, 0, 0, 0, s2, 0, 0;              // xz
    b[4] << s2, 0, 0, 0, -s2, 0, 0, 0, 0;             // x^2 - y^2
    return b;
  }();
  return basis;
}

}  // namespace

SphericalRank2 cartesian_rank2_to_spherical(const Mat3& t) {
  const double scale = std::max(1.0, t.cwiseAbs().maxCoeff());
  const double asym = (t - t.transpose()).cwiseAbs().maxCoeff();
  if (!(asym <= 1e-10 * scale)) {
    throw InvalidArgument(fmt::format("rank-2 tensor is not symmetric (max |T - T^T| = {:.3g})", asym));
  }
  const Mat3 sym = 0.5 * (t + t.transpose());
  SphericalRank2 out;
  out.scalar = sym.trace() / std::sqrt(3.0);
  const auto& basis = l2_basis();
  for (int mu = 0; mu < 5; ++mu) out.l2(mu) = (basis[mu].array() * sym.array()).sum();
  return out;
}

Mat3 spherical_to_cartesian_rank2(const SphericalRank2& parts) {
  Mat3 t = Mat3::Identity() * (parts.scalar / std::sqrt(3.0));
  const auto& basis = l2_basis();
  for (int mu = 0; mu < 5; ++mu) t += parts.l2(mu) * basis[mu];
  return t;
}

}  // namespace symprobe
