#include "spinorlab/bilinears.hpp"

#include <algorithm>
#include <cmath>

namespace spinorlab {

namespace {

// Gamma products are fixed; build them once.
struct GammaTable {
  std::array<Matrix4, 4> g;
  Matrix4 g5;
  std::array<Matrix4, 4> g_g5;
  std::array<Matrix4, 6> gg;

  GammaTable() {
    for (int mu = 0; mu < 4; ++mu) g[mu] = gamma(mu);
    g5 = gamma5();
    for (int mu = 0; mu < 4; ++mu) g_g5[mu] = g[mu] * g5;
    for (std::size_t k = 0; k < kTensorIndices.size(); ++k) {
      gg[k] = g[kTensorIndices[k][0]] * g[kTensorIndices[k][1]];
    }
  }
};

const GammaTable& table() {
  static const GammaTable t;
  return t;
}

}  // namespace

double minkowski_dot(const Real4& x, const Real4& y) {
  return x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
}

AdjointRow dirac_adjoint(const BiSpinor& psi) {
  return psi.components().adjoint() * table().g[0];
}

BilinearSet bilinear_set(const BiSpinor& psi, const Tolerance& tol) {
  if (psi.is_zero()) {
    throw DomainError(DomainError::Kind::ZeroSpinor,
                      "bilinear covariants of the zero spinor");
  }
  const GammaTable& t = table();
  const Complex4Vector& v = psi.components();
  const AdjointRow bar = dirac_adjoint(psi);
  const double limit = tol.exact * psi.norm_squared();

  auto real_part = [&](Complex z) {
    if (std::abs(z.imag()) > limit) {
      throw DomainError(DomainError::Kind::NonRealBilinear,
                        "bilinear has a non-negligible imaginary part");
    }
    return z.real();
  };
  auto sandwich = [&](const Matrix4& m) -> Complex {
    return (bar * (m * v)).value();
  };

  BilinearSet out;
  out.sigma = real_part((bar * v).value());
  out.omega = real_part(kI * sandwich(t.g5));
  for (int mu = 0; mu < 4; ++mu) {
    out.J[mu] = real_part(sandwich(t.g[mu]));
    out.K[mu] = real_part(sandwich(t.g_g5[mu]));
  }
  for (std::size_t k = 0; k < out.S.size(); ++k) {
    out.S[k] = real_part(kI * sandwich(t.gg[k]));
  }
  return out;
}

double FpkResiduals::max_abs() const {
  return std::max({std::abs(jj_minus_scalars), std::abs(j_dot_k),
                   std::abs(jj_plus_kk)});
}

FpkResiduals fpk_residuals(const BilinearSet& bset) {
  const double scale = bset.J[0] * bset.J[0];
  const double jj = minkowski_dot(bset.J, bset.J);
  const double kk = minkowski_dot(bset.K, bset.K);
  return {(jj - bset.sigma * bset.sigma - bset.omega * bset.omega) / scale,
          minkowski_dot(bset.J, bset.K) / scale, (jj + kk) / scale};
}

}  // namespace spinorlab
