#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "spinorlab/bilinears.hpp"
#include "spinorlab/errors.hpp"

using namespace spinorlab;

namespace {

// Largest deviation between the library's bilinears and the oracle's.
double deviation(const BilinearSet& b, const oracle::Bilinears& o) {
  double d = std::max(std::abs(b.sigma - o.sigma), std::abs(b.omega - o.omega));
  for (int k = 0; k < 4; ++k) {
    d = std::max({d, std::abs(b.J[k] - o.J[k]), std::abs(b.K[k] - o.K[k])});
  }
  for (int k = 0; k < 6; ++k) d = std::max(d, std::abs(b.S[k] - o.S[k]));
  return d;
}

double max_abs(const std::array<double, 6>& s) {
  double m = 0.0;
  for (double x : s) m = std::max(m, std::abs(x));
  return m;
}

double max_abs(const Real4& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

TEST_SUITE("bilinears") {
  TEST_CASE("dirac adjoint") {
    const AdjointRow bar = dirac_adjoint(BiSpinor(1.0, 0.0, 0.0, 0.0));
    CHECK(bar(0) == Complex(0.0));
    CHECK(bar(2) == Complex(1.0));

    oracle::Rand rng(31);
    for (int i = 0; i < 1000; ++i) {
      const BiSpinor psi = rng.spinor();
      const Complex s = (dirac_adjoint(psi) * psi.components()).value();
      REQUIRE(std::abs(s.imag()) < 1e-14);
      const Complex j0 = (dirac_adjoint(psi) * gamma(0) * psi.components()).value();
      REQUIRE(std::abs(j0 - psi.norm_squared()) < 1e-14);
    }
  }

  TEST_CASE("bilinears agree with the literal-matrix oracle") {
    oracle::Rand rng(32);
    for (int i = 0; i < 2000; ++i) {
      const BiSpinor psi = rng.spinor();
      REQUIRE(deviation(bilinear_set(psi), oracle::bilinears(oracle::vec(psi))) <
              1e-13 * psi.norm_squared());
    }
  }

  TEST_CASE("bilinears in chiral-block form") {
    // sigma = 2 Re(phi_R^dagger phi_L), omega = -2 Im(phi_L^dagger phi_R).
    oracle::Rand rng(33);
    for (int i = 0; i < 500; ++i) {
      const BiSpinor psi = rng.spinor();
      const Complex rl = psi.right().dot(psi.left());
      const BilinearSet b = bilinear_set(psi);
      REQUIRE(std::abs(b.sigma - 2.0 * rl.real()) < 1e-14);
      REQUIRE(std::abs(b.omega + 2.0 * std::conj(rl).imag()) < 1e-14);
    }
  }

  TEST_CASE("Dirac rest spinor (1, 0, 1, 0)") {
    const BilinearSet b = bilinear_set(BiSpinor(1.0, 0.0, 1.0, 0.0));
    CHECK(b.sigma == 2.0);
    CHECK(b.omega == 0.0);
    CHECK(b.J == Real4{2.0, 0.0, 0.0, 0.0});
    CHECK(b.K == Real4{0.0, 0.0, 0.0, 2.0});
    CHECK(minkowski_dot(b.J, b.J) == 4.0);
    CHECK(max_abs(b.S) > 0.0);
  }

  TEST_CASE("flag-pole (-i, 0, 0, 1)") {
    const BilinearSet b = bilinear_set(BiSpinor(-oracle::I, 0.0, 0.0, 1.0));
    CHECK(b.sigma == 0.0);
    CHECK(b.omega == 0.0);
    CHECK(max_abs(b.K) == 0.0);
    CHECK(max_abs(b.S) > 0.5);
  }

  TEST_CASE("Weyl (1, 0, 0, 0)") {
    const BilinearSet b = bilinear_set(BiSpinor(1.0, 0.0, 0.0, 0.0));
    CHECK(b.sigma == 0.0);
    CHECK(b.omega == 0.0);
    CHECK(max_abs(b.K) > 0.5);
    CHECK(max_abs(b.S) == 0.0);
  }

  TEST_CASE("zero spinor is rejected") {
    try {
      bilinear_set(BiSpinor());
      FAIL("expected a DomainError");
    } catch (const DomainError& e) {
      CHECK(e.kind() == DomainError::Kind::ZeroSpinor);
    }
  }

  TEST_CASE("J^0 equals psi^dagger psi") {
    oracle::Rand rng(34);
    for (int i = 0; i < 500; ++i) {
      const BiSpinor psi = rng.spinor();
      REQUIRE(std::abs(bilinear_set(psi).J[0] - psi.norm_squared()) < 1e-14);
    }
  }

  TEST_CASE("homogeneity and phase invariance") {
    oracle::Rand rng(35);
    for (int i = 0; i < 500; ++i) {
      const BiSpinor psi = rng.spinor();
      const Complex lambda = rng.complex();
      const double l2 = std::norm(lambda);
      const BilinearSet b = bilinear_set(psi);
      const BilinearSet scaled = bilinear_set(BiSpinor(lambda * psi.components()));
      oracle::Bilinears expected{b.sigma * l2, b.omega * l2, {}, {}, {}};
      for (int k = 0; k < 4; ++k) {
        expected.J[k] = b.J[k] * l2;
        expected.K[k] = b.K[k] * l2;
      }
      for (int k = 0; k < 6; ++k) expected.S[k] = b.S[k] * l2;
      REQUIRE(deviation(scaled, expected) < 1e-13 * l2 * psi.norm_squared());

      const Complex phase = std::polar(1.0, rng.uniform(0.0, 2.0 * kPi));
      const BilinearSet rotated = bilinear_set(BiSpinor(phase * psi.components()));
      expected = {b.sigma, b.omega, b.J, b.K, b.S};
      REQUIRE(deviation(rotated, expected) < 1e-12);
    }
  }

  TEST_CASE("FPK identities hold for every spinor") {
    oracle::Rand rng(36);
    for (int i = 0; i < 5000; ++i) {
      REQUIRE(fpk_residuals(bilinear_set(rng.spinor())).max_abs() < 1e-10);
    }
    const FpkResiduals dirac = fpk_residuals(bilinear_set(BiSpinor(1.0, 0.0, 1.0, 0.0)));
    CHECK(dirac.max_abs() == 0.0);
  }

  TEST_CASE("FPK residuals are scale-free") {
    oracle::Rand rng(37);
    for (int i = 0; i < 500; ++i) {
      BiSpinor psi = rng.spinor();
      psi = BiSpinor(psi.components() * (1e-8 / psi.components().norm()));
      REQUIRE(fpk_residuals(bilinear_set(psi)).max_abs() < 1e-10);
    }
  }
}
