#include "spinorlab/symmetries.hpp"

#include <algorithm>
#include <cmath>

namespace spinorlab {

namespace {

void require_nonzero(const BiSpinor& psi, const char* what) {
  if (psi.is_zero()) {
    throw DomainError(DomainError::Kind::ZeroSpinor, what);
  }
}

// x = lambda y for some real lambda >= 0, up to `slack` (absolute, in units
// of |x||y|-type products).
bool nonnegative_multiple(Complex x, Complex y, double slack) {
  if (std::norm(y) <= slack) return std::norm(x) <= slack;
  const Complex z = x * std::conj(y);
  return std::abs(z.imag()) <= slack && z.real() >= -slack;
}

}  // namespace

BiSpinor charge_conjugate(const BiSpinor& psi) {
  const Matrix2 t = wigner_theta();
  const Complex2Vector upper = kI * (t * psi.left().conjugate());
  const Complex2Vector lower = -kI * (t * psi.right().conjugate());
  Provenance prov = psi.provenance();
  return BiSpinor::from_blocks(upper, lower, std::move(prov));
}

double ConjugationCheck::residual() const {
  return std::min(residual_plus, residual_minus);
}

ConjugationCheck c_eigen_check(const BiSpinor& psi, const Tolerance& tol) {
  require_nonzero(psi, "charge-conjugation check of the zero spinor");
  const Complex4Vector& v = psi.components();
  const Complex4Vector cv = charge_conjugate(psi).components();
  const double n = v.norm();

  ConjugationCheck out;
  out.residual_plus = (cv - v).norm() / n;
  out.residual_minus = (cv + v).norm() / n;
  if (out.residual_plus < tol.exact) {
    out.eigenvalue = 1;
  } else if (out.residual_minus < tol.exact) {
    out.eigenvalue = -1;
  }

  const double slack = tol.symmetry * psi.norm_squared();
  const Complex a = psi.a(), b = psi.b(), c = psi.c(), d = psi.d();
  out.constraints.phase_pattern_self =
      nonnegative_multiple(a, -kI * std::conj(d), slack) &&
      nonnegative_multiple(b, kI * std::conj(c), slack);
  out.constraints.phase_pattern_anti =
      nonnegative_multiple(a, kI * std::conj(d), slack) &&
      nonnegative_multiple(b, -kI * std::conj(c), slack);
  out.constraints.norm_balance =
      std::abs(std::norm(a) - std::norm(d)) <= slack &&
      std::abs(std::norm(b) - std::norm(c)) <= slack;
  return out;
}

BiSpinor parity_apply(const BiSpinor& psi_at_p, const FourMomentum& p) {
  const Matrix2 br = boost_block(Handedness::Right, p);
  const Matrix2 bl = boost_block(Handedness::Left, p);
  // B_L B_R = identity, so each boost undoes the other.
  const Complex2Vector right_rest = bl * psi_at_p.right();
  const Complex2Vector left_rest = br * psi_at_p.left();

  const FourMomentum reflected(p.mass(), p.pmag(), p.direction().reflected());
  const Complex4Vector at_reflected =
      BiSpinor::from_blocks(boost_block(Handedness::Right, reflected) * right_rest,
                            boost_block(Handedness::Left, reflected) * left_rest)
          .components();
  return BiSpinor(gamma(0) * at_reflected, psi_at_p.provenance());
}

double ParityCheck::residual() const {
  return std::min(residual_plus, residual_minus);
}

ParityCheck parity_eigen_check(const BiSpinor& psi, const FourMomentum& p,
                               const Tolerance& tol) {
  require_nonzero(psi, "parity check of the zero spinor");
  const Complex4Vector& v = psi.components();
  const Complex4Vector pv = parity_apply(psi, p).components();
  const double n = v.norm();
  ParityCheck out;
  out.residual_plus = (pv - v).norm() / n;
  out.residual_minus = (pv + v).norm() / n;
  if (out.residual_plus < tol.symmetry) {
    out.eigenvalue = 1;
  } else if (out.residual_minus < tol.symmetry) {
    out.eigenvalue = -1;
  }
  return out;
}

double dirac_residual(const BiSpinor& psi, const FourMomentum& p, int sign) {
  require_nonzero(psi, "Dirac residual of the zero spinor");
  if (!(p.mass() > 0.0)) {
    throw DomainError(DomainError::Kind::Massless,
                      "Dirac residual is normalised by m and needs m > 0");
  }
  if (sign != 1 && sign != -1) {
    throw DomainError(DomainError::Kind::InvalidArgument,
                      "Dirac residual sign must be +1 or -1");
  }
  const Complex4Vector& v = psi.components();
  const Complex4Vector r = slash(p) * v - (sign * p.mass()) * v;
  return r.norm() / (p.mass() * v.norm());
}

double dirac_flip_residual(const BiSpinor& first, const BiSpinor& second,
                           const FourMomentum& p) {
  require_nonzero(first, "Dirac flip residual of a zero spinor");
  require_nonzero(second, "Dirac flip residual against a zero spinor");
  const Complex4Vector v = slash(p) * first.components();
  const Complex4Vector& w = second.components();
  const double vn = v.norm();
  if (vn == 0.0) {
    throw DomainError(DomainError::Kind::ZeroSpinor,
                      "Dirac operator annihilates the first spinor");
  }
  const Complex coeff = w.dot(v) / w.squaredNorm();
  return (v - coeff * w).norm() / vn;
}

double theta_link_check(const Complex2Vector& block_at_rest, Handedness source,
                        const FourMomentum& p, Complex zeta) {
  if (std::abs(std::abs(zeta) - 1.0) > 1e-12) {
    throw DomainError(DomainError::Kind::InvalidArgument,
                      "link phase zeta must have unit modulus");
  }
  const double scale = boost_operator_norm(p) * block_at_rest.norm();
  if (scale == 0.0) return 0.0;
  const Handedness target =
      source == Handedness::Left ? Handedness::Right : Handedness::Left;
  const Complex2Vector boosted = boost_block(source, p) * block_at_rest;
  const Complex2Vector lhs = zeta * theta_conjugate(boosted);
  const Complex2Vector rhs =
      boost_block(target, p) * (zeta * theta_conjugate(block_at_rest));
  return (lhs - rhs).norm() / scale;
}

double theta_link_check(const Complex2Vector& phi_left_at_rest,
                        const FourMomentum& p, Complex zeta) {
  return theta_link_check(phi_left_at_rest, Handedness::Left, p, zeta);
}

SymmetryReport symmetry_report(const BiSpinor& psi, const FourMomentum& p,
                               const Phases& phases, const Tolerance& tol,
                               const std::optional<BiSpinor>& flip_partner) {
  SymmetryReport rep;
  rep.phases = phases;
  rep.parity = parity_eigen_check(psi, p, tol);
  rep.conjugation = c_eigen_check(psi, tol);
  rep.dirac_residual_plus = dirac_residual(psi, p, 1);
  rep.dirac_residual_minus = dirac_residual(psi, p, -1);
  if (flip_partner) {
    rep.dirac_flip_residual = dirac_flip_residual(psi, *flip_partner, p);
  }
  const Complex2Vector right_rest = boost_block(Handedness::Left, p) * psi.right();
  const Complex2Vector left_rest = boost_block(Handedness::Right, p) * psi.left();
  rep.theta_link_residual =
      std::max(theta_link_check(left_rest, Handedness::Left, p, phases.zeta1),
               theta_link_check(right_rest, Handedness::Right, p, phases.zeta2));
  return rep;
}

}  // namespace spinorlab
