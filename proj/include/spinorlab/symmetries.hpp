#pragma once

#include <optional>

#include "spinorlab/spinor.hpp"

namespace spinorlab {

/// C psi = blockwise (i Theta conj(left), -i Theta conj(right)).
/// Antilinear involution: C(C(psi)) = psi.
BiSpinor charge_conjugate(const BiSpinor& psi);

/// Component constraints of C eigenspinors, split so a failure can be
/// attributed. Phase patterns ask for a non-negative real ratio
/// (a : -i d* and b : i c* for the self-conjugate sign); norm balance asks
/// for |a| = |d| and |b| = |c|. Both together are equivalent to C psi = +/- psi.
struct ConjugacyConstraints {
  bool phase_pattern_self = false;
  bool phase_pattern_anti = false;
  bool norm_balance = false;
};

struct ConjugationCheck {
  std::optional<int> eigenvalue;
  double residual_plus = 0.0;   // |C psi - psi| / |psi|
  double residual_minus = 0.0;  // |C psi + psi| / |psi|
  ConjugacyConstraints constraints;

  double residual() const;
};

/// Throws DomainError(ZeroSpinor). Eigenvalue reported when the residual is
/// below tol.exact.
ConjugationCheck c_eigen_check(const BiSpinor& psi, const Tolerance& tol = {});

/// Parity on a spinor evaluated at p: the rest-frame blocks are recovered by
/// un-boosting (B_L = B_R^{-1}), re-boosted at the reflected momentum (E, -p)
/// and swapped by gamma^0. The result equals slash(p) psi / m.
BiSpinor parity_apply(const BiSpinor& psi_at_p, const FourMomentum& p);

struct ParityCheck {
  std::optional<int> eigenvalue;
  double residual_plus = 0.0;
  double residual_minus = 0.0;

  double residual() const;
};

/// Eigenvalue reported when the residual is below tol.symmetry.
ParityCheck parity_eigen_check(const BiSpinor& psi, const FourMomentum& p,
                               const Tolerance& tol = {});

/// |slash(p) psi - sign m psi| / (m |psi|), sign = +1 or -1.
double dirac_residual(const BiSpinor& psi, const FourMomentum& p, int sign);

/// Collinearity defect of v = slash(p) first against w = second:
/// |v - (<w,v>/<w,w>) w| / |v|. Zero means slash(p) first is proportional
/// to second.
double dirac_flip_residual(const BiSpinor& first, const BiSpinor& second,
                           const FourMomentum& p);

/// Residual of [zeta Theta phi*(p)] = B_opposite [zeta Theta phi*(k)] with
/// phi(p) = B_source phi(k), normalised by |B| |phi(k)|. Source Left checks
/// that Theta-conjugated left blocks boost as right-handed ones, and vice
/// versa. |zeta| must be 1.
double theta_link_check(const Complex2Vector& block_at_rest, Handedness source,
                        const FourMomentum& p, Complex zeta);

/// Convenience form for left-handed blocks.
double theta_link_check(const Complex2Vector& phi_left_at_rest,
                        const FourMomentum& p, Complex zeta);

/// Rest-spinor phases (theta1 for +, theta2 for -) and link phases zeta1
/// (left -> right) and zeta2 (right -> left).
struct Phases {
  double theta1 = kDefaultPhasePlus;
  double theta2 = kDefaultPhaseMinus;
  Complex zeta1{1.0, 0.0};
  Complex zeta2{1.0, 0.0};
};

struct SymmetryReport {
  ParityCheck parity;
  ConjugationCheck conjugation;
  double dirac_residual_plus = 0.0;
  double dirac_residual_minus = 0.0;
  std::optional<double> dirac_flip_residual;
  double theta_link_residual = 0.0;
  Phases phases;
};

/// All symmetry diagnostics for psi at momentum p. `flip_partner`, when
/// given, is the spinor slash(p) psi is expected to be proportional to.
SymmetryReport symmetry_report(const BiSpinor& psi, const FourMomentum& p,
                               const Phases& phases = {},
                               const Tolerance& tol = {},
                               const std::optional<BiSpinor>& flip_partner = {});

}  // namespace spinorlab
