#pragma once

// Fixed-size complex linear algebra for the (1/2,0) + (0,1/2) representation:
// Pauli and gamma matrices (chiral basis, right-handed block on top), the
// Wigner time-reversal matrix, helicity operator, boosts and rotations.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <numbers>

#include "spinorlab/errors.hpp"

namespace spinorlab {

using Complex = std::complex<double>;
using Complex2Vector = Eigen::Vector2cd;
using Complex4Vector = Eigen::Vector4cd;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Real3 = std::array<double, 3>;
using Real4 = std::array<double, 4>;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

/// Comparison thresholds used across the library.
///
/// `exact` is for identities that hold to rounding (involutions, Clifford
/// relations). `symmetry` is for eigen-verdicts whose residuals grow with the
/// boost. `epsilon_class` and `epsilon_helicity` are relative thresholds for
/// the zero tests in classification and for block eigen-residuals.
struct Tolerance {
  double exact = 1e-12;
  double symmetry = 1e-10;
  double epsilon_class = 1e-9;
  double epsilon_helicity = 1e-9;
};

enum class Handedness { Right, Left };

/// A point on the unit sphere in polar/azimuthal angles.
struct Direction {
  double theta = 0.0;
  double phi = 0.0;

  Real3 unit() const;
  /// Antipodal direction (pi - theta, phi + pi).
  Direction reflected() const;
};

/// On-shell four-momentum in spherical coordinates. The energy is derived,
/// so E^2 - |p|^2 = m^2 holds by construction.
class FourMomentum {
 public:
  FourMomentum(double mass, double pmag, Direction direction = {});

  /// Rest-frame momentum k^mu: zero magnitude, direction retained.
  static FourMomentum at_rest(double mass, Direction direction = {});

  double mass() const noexcept { return mass_; }
  double pmag() const noexcept { return pmag_; }
  Direction direction() const noexcept { return direction_; }
  double energy() const noexcept;
  Real3 three_momentum() const;
  /// Contravariant components (E, px, py, pz).
  Real4 contravariant() const;

 private:
  double mass_;
  double pmag_;
  Direction direction_;
};

Matrix2 identity2();
Matrix4 identity4();

/// Pauli matrix sigma_k for k in {1,2,3}.
Matrix2 pauli(int k);

/// sigma . n for the unit vector at (theta, phi):
/// [[cos t, sin t e^{-i p}], [sin t e^{i p}, -cos t]].
Matrix2 pauli_dot(Direction n);

/// Wigner time-reversal matrix [[0,-1],[1,0]].
Matrix2 wigner_theta();

/// Theta * conj(block). Maps a sigma.p eigenvector of eigenvalue h to one of
/// eigenvalue -h; applying it twice gives -block.
Complex2Vector theta_conjugate(const Complex2Vector& block);

/// Chiral-basis gamma^mu: gamma^0 = offdiag(I, I),
/// gamma^i = [[0, -sigma_i], [sigma_i, 0]]. Throws std::out_of_range for mu
/// outside 0..3.
Matrix4 gamma(int mu);

/// gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3 = diag(I, -I).
Matrix4 gamma5();

/// Minkowski metric diag(+,-,-,-) component eta^{mu mu}.
double metric(int mu);

/// gamma_mu p^mu = E gamma^0 - p . gamma.
Matrix4 slash(const FourMomentum& p);

/// Chiral boost sqrt((E+m)/2m) (I +/- sigma.p/(E+m)); + for Right.
/// Throws DomainError(Massless) for m <= 0.
Matrix2 boost_block(Handedness handedness, const FourMomentum& p);

/// Largest singular value of either chiral boost, sqrt((E+m)/2m)(1 + p/(E+m)).
double boost_operator_norm(const FourMomentum& p);

/// cos(angle/2) I + i sigma.n sin(angle/2).
Matrix2 rotation_block(double angle, const Real3& axis);

Matrix4 anticommutator(const Matrix4& x, const Matrix4& y);

}  // namespace spinorlab
