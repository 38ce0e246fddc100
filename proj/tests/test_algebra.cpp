#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "spinorlab/algebra.hpp"
#include "spinorlab/errors.hpp"

using namespace spinorlab;

namespace {

template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("pauli_dot along the axes") {
    Matrix2 z;
    z << 1.0, 0.0, 0.0, -1.0;
    CHECK(max_abs(pauli_dot({0.0, 0.0}) - z) == 0.0);

    Matrix2 x;
    x << 0.0, 1.0, 1.0, 0.0;
    CHECK(max_abs(pauli_dot({kPi / 2, 0.0}) - x) < 1e-16);
  }

  TEST_CASE("pauli_dot squares to the identity") {
    const Matrix2 s = pauli_dot({kPi / 3, kPi / 5});
    CHECK(max_abs(s * s - identity2()) < 1e-15);

    oracle::Rand rng(11);
    for (int i = 0; i < 100; ++i) {
      const Matrix2 n = pauli_dot({rng.theta(), rng.phi()});
      REQUIRE(max_abs(n * n - identity2()) < 1e-15);
      REQUIRE(max_abs(n - n.adjoint()) == 0.0);
    }
  }

  TEST_CASE("pauli matrices are Hermitian, traceless and involutive") {
    for (int k = 1; k <= 3; ++k) {
      const Matrix2 s = pauli(k);
      CHECK(max_abs(s - s.adjoint()) == 0.0);
      CHECK(std::abs(s.trace()) == 0.0);
      CHECK(max_abs(s * s - identity2()) == 0.0);
    }
    CHECK_THROWS_AS(pauli(0), std::out_of_range);
    CHECK_THROWS_AS(pauli(4), std::out_of_range);
  }

  TEST_CASE("wigner theta") {
    const Matrix2 t = wigner_theta();
    CHECK(max_abs(t * t + identity2()) == 0.0);
    CHECK(max_abs(t.transpose() + t) == 0.0);
    for (int k = 1; k <= 3; ++k) {
      CHECK(max_abs(t * pauli(k).conjugate() * t.inverse() + pauli(k)) == 0.0);
    }
    Complex2Vector e1(1.0, 0.0);
    const Complex2Vector out = t * e1;
    CHECK(out(0) == Complex(0.0));
    CHECK(out(1) == Complex(1.0));
  }

  TEST_CASE("theta_conjugate") {
    const Complex2Vector out = theta_conjugate(Complex2Vector(1.0, 0.0));
    CHECK(out(0) == Complex(0.0));
    CHECK(out(1) == Complex(1.0));

    // Helicity + eigenvector at (pi/3, pi/5), written out by hand.
    const double th = kPi / 3, ph = kPi / 5;
    const Complex2Vector plus(std::cos(th / 2) * std::polar(1.0, -ph / 2),
                              std::sin(th / 2) * std::polar(1.0, ph / 2));
    REQUIRE(oracle::eigen_residual(plus(0), plus(1), th, ph, 1.0) < 1e-15);
    const Complex2Vector flipped = theta_conjugate(plus);
    CHECK(oracle::eigen_residual(flipped(0), flipped(1), th, ph, -1.0) < 1e-14);

    CHECK((theta_conjugate(theta_conjugate(plus)) + plus).norm() == 0.0);
  }

  TEST_CASE("theta_conjugate flips helicity for random eigenvectors") {
    oracle::Rand rng(12);
    for (int i = 0; i < 200; ++i) {
      const double th = rng.theta(), ph = rng.phi();
      const Matrix2 n = pauli_dot({th, ph});
      Eigen::SelfAdjointEigenSolver<Matrix2> es(n);
      for (int k = 0; k < 2; ++k) {
        const double h = es.eigenvalues()(k);
        const Complex2Vector v = rng.complex() * es.eigenvectors().col(k);
        const Complex2Vector w = theta_conjugate(v);
        REQUIRE(oracle::eigen_residual(w(0), w(1), th, ph, -h) < 1e-12);
      }
    }
  }

  TEST_CASE("gamma matrices satisfy the Clifford algebra exactly") {
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = 0; nu < 4; ++nu) {
        const double eta = mu == nu ? metric(mu) : 0.0;
        CHECK(max_abs(anticommutator(gamma(mu), gamma(nu)) - 2.0 * eta * identity4()) == 0.0);
      }
    }
    CHECK(max_abs(gamma(0) - gamma(0).adjoint()) == 0.0);
    for (int i = 1; i <= 3; ++i) CHECK(max_abs(gamma(i) + gamma(i).adjoint()) == 0.0);
    CHECK_THROWS_AS(gamma(4), std::out_of_range);
    CHECK_THROWS_AS(gamma(-1), std::out_of_range);
  }

  TEST_CASE("gamma matrices match the literal chiral tables") {
    for (int mu = 0; mu < 4; ++mu) {
      const auto ref = oracle::gamma(mu);
      const Matrix4 g = gamma(mu);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) REQUIRE(g(i, j) == ref[i][j]);
    }
  }

  TEST_CASE("gamma5 is diag(1, 1, -1, -1)") {
    const auto ref = oracle::gamma5();
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const double expected = i == j ? (i < 2 ? 1.0 : -1.0) : 0.0;
        CHECK(std::abs(ref[i][j] - expected) == 0.0);
        CHECK(std::abs(gamma5()(i, j) - expected) == 0.0);
      }
    }
  }

  TEST_CASE("four-momentum is on shell and validated") {
    const FourMomentum p(2.0, 3.0, {kPi / 4, 1.0});
    const Real4 pu = p.contravariant();
    CHECK(pu[0] * pu[0] - pu[1] * pu[1] - pu[2] * pu[2] - pu[3] * pu[3] ==
          doctest::Approx(4.0).epsilon(1e-14));
    CHECK(p.energy() == doctest::Approx(std::sqrt(13.0)).epsilon(1e-15));
    CHECK_THROWS_AS(FourMomentum(-1.0, 0.0), DomainError);
    CHECK_THROWS_AS(FourMomentum(1.0, -1.0), DomainError);
    CHECK_THROWS_AS(FourMomentum(1.0, 1.0, {4.0, 0.0}), DomainError);
    CHECK_THROWS_AS(FourMomentum(1.0, NAN), DomainError);
  }

  TEST_CASE("slash(p) squares to m^2") {
    oracle::Rand rng(13);
    for (int i = 0; i < 200; ++i) {
      const double m = std::pow(10.0, rng.uniform(-2.0, 2.0));
      const FourMomentum p(m, rng.uniform(0.0, 10.0) * m, {rng.theta(), rng.phi()});
      const Matrix4 s = slash(p);
      REQUIRE((s * s - m * m * identity4()).norm() < 1e-12 * m * m);
    }
  }

  TEST_CASE("boost at rest is the identity") {
    const FourMomentum p = FourMomentum::at_rest(3.0, {1.0, 2.0});
    CHECK(max_abs(boost_block(Handedness::Right, p) - identity2()) == 0.0);
    CHECK(max_abs(boost_block(Handedness::Left, p) - identity2()) == 0.0);
  }

  TEST_CASE("right boost along z on spin up") {
    const double m = 1.0, pm = 1.0, E = std::sqrt(2.0);
    const FourMomentum p(m, pm, {0.0, 0.0});
    const Complex2Vector out = boost_block(Handedness::Right, p) * Complex2Vector(1.0, 0.0);
    const double factor = (E + m + pm) / std::sqrt(2.0 * m * (E + m));
    CHECK(std::abs(out(0) - factor) < 1e-15);
    CHECK(std::abs(out(1)) == 0.0);
  }

  TEST_CASE("boosts are mutually inverse with unit determinant") {
    oracle::Rand rng(14);
    for (int i = 0; i < 500; ++i) {
      const double m = std::pow(10.0, rng.uniform(-2.0, 2.0));
      const FourMomentum p(m, rng.uniform(0.0, 100.0) * m, {rng.theta(), rng.phi()});
      const Matrix2 br = boost_block(Handedness::Right, p);
      const Matrix2 bl = boost_block(Handedness::Left, p);
      REQUIRE(std::abs(br.determinant() * bl.determinant() - 1.0) < 1e-12);
      REQUIRE(std::abs(br.determinant() - 1.0) < 1e-11);
      REQUIRE(max_abs(br * bl - identity2()) < 1e-11);
      // Theta maps the left boost onto the right one.
      const Matrix2 t = wigner_theta();
      REQUIRE(max_abs(t * bl.conjugate() * t.inverse() - br) < 1e-12 * br.norm());
    }
  }

  TEST_CASE("right and left boosts differ iff pmag > 0") {
    const Direction d{0.7, 0.3};
    CHECK(max_abs(boost_block(Handedness::Right, FourMomentum(1.0, 0.0, d)) -
                  boost_block(Handedness::Left, FourMomentum(1.0, 0.0, d))) == 0.0);
    for (double pm : {1e-6, 0.5, 10.0}) {
      CHECK(max_abs(boost_block(Handedness::Right, FourMomentum(1.0, pm, d)) -
                    boost_block(Handedness::Left, FourMomentum(1.0, pm, d))) > 0.0);
    }
  }

  TEST_CASE("massless boosts are rejected") {
    CHECK_THROWS_AS(boost_block(Handedness::Right, FourMomentum(0.0, 1.0)), DomainError);
    try {
      boost_block(Handedness::Left, FourMomentum(0.0, 1.0));
    } catch (const DomainError& e) {
      CHECK(e.kind() == DomainError::Kind::Massless);
    }
  }

  TEST_CASE("boost operator norm is the largest singular value") {
    const FourMomentum p(1.5, 7.0, {2.0, 4.0});
    Eigen::JacobiSVD<Matrix2> svd(boost_block(Handedness::Right, p));
    CHECK(boost_operator_norm(p) == doctest::Approx(svd.singularValues()(0)).epsilon(1e-14));
  }

  TEST_CASE("rotation blocks") {
    const Real3 z{0.0, 0.0, 1.0};
    CHECK(max_abs(rotation_block(0.0, z) - identity2()) == 0.0);
    for (const Real3& axis : {z, Real3{1.0, 0.0, 0.0}, Real3{0.6, 0.0, 0.8}}) {
      CHECK(max_abs(rotation_block(2.0 * kPi, axis) + identity2()) < 1e-15);
    }
    Matrix2 expected;
    expected << kI, 0.0, 0.0, -kI;
    CHECK(max_abs(rotation_block(kPi, z) - expected) < 1e-15);

    const Real3 axis{2.0 / 3.0, -1.0 / 3.0, 2.0 / 3.0};
    const Matrix2 r = rotation_block(1.234, axis);
    CHECK(max_abs(r * r.adjoint() - identity2()) < 1e-15);
    CHECK(std::abs(r.determinant() - 1.0) < 1e-15);
  }
}
