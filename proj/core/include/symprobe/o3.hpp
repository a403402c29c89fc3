#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace symprobe {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Label (lambda, sigma) of an O(3) irrep: angular order and parity under inversion.
class IrrepLabel {
 public:
  IrrepLabel(int lambda, int sigma);

  int lambda() const { return lambda_; }
  int sigma() const { return sigma_; }
  int dim() const { return 2 * lambda_ + 1; }

  /// "(2,+1)"
  std::string to_string() const;
  /// Accepts "2,+1", "(2,-1)", "2,1", "2 -1".
  static IrrepLabel parse(std::string_view text);

  friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;

 private:
  int lambda_;
  int sigma_;
};

/// Eigenvalue of the inversion on irrep (lambda, sigma): sigma * (-1)^lambda.
/// Proper irreps (sigma = +1) behave like solid harmonics of polar vectors, so
/// (1,+1) is a vector and flips sign, (0,-1) is a pseudoscalar.
double inversion_sign(const IrrepLabel& label);

/// All labels (lambda, +1) and (lambda, -1) for lambda <= lambda_max, ordered by lambda then sigma (+1 first).
std::vector<IrrepLabel> all_labels(int lambda_max);

/// Element of O(3): a proper rotation optionally composed with the inversion.
class GroupElement {
 public:
  GroupElement() = default;

  /// Throws InvalidArgument unless `rotation` is orthogonal with det +1 to 1e-12.
  static GroupElement from_rotation(const Mat3& rotation, bool parity = false);
  static GroupElement from_quaternion(const Eigen::Quaterniond& q, bool parity = false);
  static GroupElement from_axis_angle(const Vec3& axis, double angle, bool parity = false);
  /// Rz(alpha) Ry(beta) Rz(gamma).
  static GroupElement from_euler_zyz(double alpha, double beta, double gamma, bool parity = false);
  static GroupElement identity() { return {}; }
  static GroupElement inversion() { return from_rotation(Mat3::Identity(), true); }

  const Mat3& rotation() const { return rotation_; }
  bool parity() const { return parity_; }
  /// Full 3x3 action on polar vectors: rotation, negated when parity is set.
  Mat3 matrix() const { return parity_ ? Mat3(-rotation_) : rotation_; }
  double det() const { return parity_ ? -1.0 : 1.0; }
  Eigen::Quaterniond quaternion() const;
  /// Rotation angle of the proper part, in [0, pi].
  double rotation_angle() const;
  bool is_identity() const;

  GroupElement inverse() const;
  Vec3 apply(const Vec3& v) const { return matrix() * v; }

  friend GroupElement operator*(const GroupElement& g, const GroupElement& h);

 private:
  GroupElement(const Mat3& rotation, bool parity) : rotation_(rotation), parity_(parity) {}

  Mat3 rotation_ = Mat3::Identity();
  bool parity_ = false;
};

struct WignerBlock {
  IrrepLabel label;
  Eigen::MatrixXd matrix;
};

/// Real-basis representation matrix of g on irrep `label`.
///
/// Basis order within a block is mu = -lambda..lambda of the real spherical
/// harmonics (no Condon-Shortley phase), so lambda = 1 is the (y, z, x)
/// permutation of the rotation matrix. Convention: Y(R r) = D(R) Y(r).
/// Inversion acts on (lambda, sigma) as inversion_sign(label) * identity.
WignerBlock wigner_d(const IrrepLabel& label, const GroupElement& g);

/// Proper-rotation blocks D^0(R) .. D^lambda_max(R) computed in one recursion pass.
std::vector<Eigen::MatrixXd> wigner_d_blocks(int lambda_max, const Mat3& rotation);

/// chi_alpha(g) = Tr rho_alpha(g), evaluated from the rotation angle without division.
double character(const IrrepLabel& label, const GroupElement& g);

/// r^lambda Y_lambda^mu(r_hat) for lambda = 0..lambda_max, orthonormal real
/// spherical harmonics, one block of length 2*lambda+1 per lambda.
std::vector<Eigen::VectorXd> real_solid_harmonics(const Vec3& r, int lambda_max);

/// Same values concatenated into one vector of length (lambda_max+1)^2.
Eigen::VectorXd real_solid_harmonics_flat(const Vec3& r, int lambda_max);

/// Cartesian (x, y, z) <-> lambda = 1 basis order (y, z, x). Vector outputs must be
/// in the latter order for wigner_d((1, sigma)) to act on them.
inline Vec3 cartesian_to_l1(const Vec3& v) { return {v.y(), v.z(), v.x()}; }
inline Vec3 l1_to_cartesian(const Vec3& v) { return {v.z(), v.x(), v.y()}; }

/// Orthonormal embedding of a symmetric rank-2 tensor into (0,+1) + (2,+1) parts.
struct SphericalRank2 {
  double scalar = 0.0;                     // Tr T / sqrt(3)
  Eigen::Matrix<double, 5, 1> l2 = Eigen::Matrix<double, 5, 1>::Zero();
};

/// Throws InvalidArgument if T is not symmetric to 1e-10 (relative to its scale).
SphericalRank2 cartesian_rank2_to_spherical(const Mat3& tensor);
Mat3 spherical_to_cartesian_rank2(const SphericalRank2& parts);

}  // namespace symprobe
