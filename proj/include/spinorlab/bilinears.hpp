#pragma once

#include <array>

#include "spinorlab/spinor.hpp"

namespace spinorlab {

/// Row vector psi^dagger gamma^0.
using AdjointRow = Eigen::RowVector4cd;

/// Index pairs of the stored spin-tensor components, in storage order.
inline constexpr std::array<std::array<int, 2>, 6> kTensorIndices{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Bilinear covariants of one spinor:
///   sigma = psibar psi, omega = i psibar gamma5 psi,
///   J^mu = psibar gamma^mu psi, K^mu = psibar gamma^mu gamma5 psi,
///   S^{mu nu} = i psibar gamma^mu gamma^nu psi (mu < nu, kTensorIndices order).
struct BilinearSet {
  double sigma = 0.0;
  double omega = 0.0;
  Real4 J{};
  Real4 K{};
  std::array<double, 6> S{};
};

/// Minkowski inner product with diag(+,-,-,-).
double minkowski_dot(const Real4& x, const Real4& y);

AdjointRow dirac_adjoint(const BiSpinor& psi);

/// Throws DomainError(ZeroSpinor) for psi = 0, and DomainError(NonRealBilinear)
/// if any sandwich has an imaginary residue above tol.exact * psi^dagger psi.
BilinearSet bilinear_set(const BiSpinor& psi, const Tolerance& tol = {});

/// Normalised residuals of the scalar Fierz-Pauli-Kofink identities.
struct FpkResiduals {
  double jj_minus_scalars = 0.0;  // (J.J - sigma^2 - omega^2) / (J^0)^2
  double j_dot_k = 0.0;           // J.K / (J^0)^2
  double jj_plus_kk = 0.0;        // (J.J + K.K) / (J^0)^2

  double max_abs() const;
};

FpkResiduals fpk_residuals(const BilinearSet& bset);

}  // namespace spinorlab
