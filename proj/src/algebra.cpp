#include "spinorlab/algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinorlab {

const char* to_string(DomainError::Kind kind) noexcept {
  switch (kind) {
    case DomainError::Kind::ZeroSpinor: return "zero_spinor";
    case DomainError::Kind::SingularAngle: return "singular_angle";
    case DomainError::Kind::Massless: return "massless";
    case DomainError::Kind::DirectionMismatch: return "direction_mismatch";
    case DomainError::Kind::InvalidArgument: return "invalid_argument";
    case DomainError::Kind::NonRealBilinear: return "non_real_bilinear";
  }
  return "unknown";
}

Real3 Direction::unit() const {
  const double s = std::sin(theta);
  return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

Direction Direction::reflected() const { return {kPi - theta, phi + kPi}; }

FourMomentum::FourMomentum(double mass, double pmag, Direction direction)
    : mass_(mass), pmag_(pmag), direction_(direction) {
  if (!std::isfinite(mass) || mass < 0.0) {
    throw DomainError(DomainError::Kind::InvalidArgument,
                      "mass must be finite and non-negative");
  }
  if (!std::isfinite(pmag) || pmag < 0.0) {
    throw DomainError(DomainError::Kind::InvalidArgument,
                      "momentum magnitude must be finite and non-negative");
  }
  if (!std::isfinite(direction.theta) || direction.theta < 0.0 ||
      direction.theta > kPi || !std::isfinite(direction.phi)) {
    throw DomainError(DomainError::Kind::InvalidArgument,
                      "polar angle must lie in [0, pi]");
  }
}

FourMomentum FourMomentum::at_rest(double mass, Direction direction) {
  return FourMomentum(mass, 0.0, direction);
}

double FourMomentum::energy() const noexcept { return std::hypot(mass_, pmag_); }

Real3 FourMomentum::three_momentum() const {
  const Real3 n = direction_.unit();
  return {pmag_ * n[0], pmag_ * n[1], pmag_ * n[2]};
}

Real4 FourMomentum::contravariant() const {
  const Real3 p = three_momentum();
  return {energy(), p[0], p[1], p[2]};
}

Matrix2 identity2() { return Matrix2::Identity(); }
Matrix4 identity4() { return Matrix4::Identity(); }

Matrix2 pauli(int k) {
  Matrix2 s = Matrix2::Zero();
  switch (k) {
    case 1:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      break;
    case 2:
      s(0, 1) = -kI;
      s(1, 0) = kI;
      break;
    case 3:
      s(0, 0) = 1.0;
      s(1, 1) = -1.0;
      break;
    default:
      throw std::out_of_range("pauli: index must be 1, 2 or 3, got " +
                              std::to_string(k));
  }
  return s;
}

Matrix2 pauli_dot(Direction n) {
  const double ct = std::cos(n.theta);
  const double st = std::sin(n.theta);
  Matrix2 m;
  m << ct, st * std::polar(1.0, -n.phi),
       st * std::polar(1.0, n.phi), -ct;
  return m;
}

Matrix2 wigner_theta() {
  Matrix2 t;
  t << 0.0, -1.0,
       1.0, 0.0;
  return t;
}

Complex2Vector theta_conjugate(const Complex2Vector& block) {
  return wigner_theta() * block.conjugate();
}

Matrix4 gamma(int mu) {
  if (mu < 0 || mu > 3) {
    throw std::out_of_range("gamma: index must be in 0..3, got " +
                            std::to_string(mu));
  }
  Matrix4 g = Matrix4::Zero();
  if (mu == 0) {
    g.topRightCorner<2, 2>() = identity2();
    g.bottomLeftCorner<2, 2>() = identity2();
  } else {
    g.topRightCorner<2, 2>() = -pauli(mu);
    g.bottomLeftCorner<2, 2>() = pauli(mu);
  }
  return g;
}

Matrix4 gamma5() { return kI * gamma(0) * gamma(1) * gamma(2) * gamma(3); }

double metric(int mu) {
  if (mu < 0 || mu > 3) {
    throw std::out_of_range("metric: index must be in 0..3");
  }
  return mu == 0 ? 1.0 : -1.0;
}

Matrix4 slash(const FourMomentum& p) {
  const Real4 pu = p.contravariant();
  Matrix4 s = Matrix4::Zero();
  for (int mu = 0; mu < 4; ++mu) {
    s += (metric(mu) * pu[mu]) * gamma(mu);
  }
  return s;
}

namespace {

Matrix2 sigma_dot_vector(const Real3& v) {
  return v[0] * pauli(1) + v[1] * pauli(2) + v[2] * pauli(3);
}

void require_massive(const FourMomentum& p) {
  if (!(p.mass() > 0.0)) {
    throw DomainError(DomainError::Kind::Massless,
                      "boost requires m > 0 (no rest frame for massless momenta)");
  }
}

}  // namespace

Matrix2 boost_block(Handedness handedness, const FourMomentum& p) {
  require_massive(p);
  const double m = p.mass();
  const double e = p.energy();
  const double norm = std::sqrt((e + m) / (2.0 * m));
  const double sign = handedness == Handedness::Right ? 1.0 : -1.0;
  const Matrix2 sp = sigma_dot_vector(p.three_momentum());
  return norm * (identity2() + (sign / (e + m)) * sp);
}

double boost_operator_norm(const FourMomentum& p) {
  require_massive(p);
  const double m = p.mass();
  const double e = p.energy();
  return std::sqrt((e + m) / (2.0 * m)) * (1.0 + p.pmag() / (e + m));
}

Matrix2 rotation_block(double angle, const Real3& axis) {
  const double len = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] +
                               axis[2] * axis[2]);
  if (std::abs(len - 1.0) > 1e-12) {
    throw DomainError(DomainError::Kind::InvalidArgument,
                      "rotation axis must be a unit vector");
  }
  return std::cos(angle / 2.0) * identity2() +
         (kI * std::sin(angle / 2.0)) * sigma_dot_vector(axis);
}

Matrix4 anticommutator(const Matrix4& x, const Matrix4& y) {
  return x * y + y * x;
}

}  // namespace spinorlab
