#include <cmath>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "spinorlab/classify.hpp"
#include "spinorlab/errors.hpp"

using namespace spinorlab;

namespace {

const HelicityPair kPP{Helicity::Plus, Helicity::Plus};
const HelicityPair kMM{Helicity::Minus, Helicity::Minus};
const HelicityPair kPM{Helicity::Plus, Helicity::Minus};

int class_of(const BiSpinor& psi) {
  return lounesto_class(bilinear_set(psi), psi.norm_squared()).index;
}

// Class from the oracle's bilinears with the same relative zero test.
int oracle_class(const BiSpinor& psi) {
  const oracle::Bilinears b = oracle::bilinears(oracle::vec(psi));
  const double eps = 1e-9 * psi.norm_squared();
  double k = 0.0, s = 0.0;
  for (double x : b.K) k = std::max(k, std::abs(x));
  for (double x : b.S) s = std::max(s, std::abs(x));
  const bool sg = std::abs(b.sigma) > eps, om = std::abs(b.omega) > eps;
  if (sg && om) return 1;
  if (sg) return 2;
  if (om) return 3;
  if (k > eps && s > eps) return 4;
  if (s > eps) return 5;
  if (k > eps) return 6;
  return 0;
}

bool has_finding(const ClassifyReport& r, const std::string& text) {
  for (const auto& f : r.findings) {
    if (f.find(text) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("reference spinors") {
    CHECK(class_of(BiSpinor(1.0, 0.0, 1.0, 0.0)) == 2);
    CHECK(class_of(BiSpinor(-oracle::I, 0.0, 0.0, 1.0)) == 5);
    CHECK(class_of(BiSpinor(1.0, 0.0, 0.0, 0.0)) == 6);
    CHECK(class_of(build_singular_form({0.0, 2.0}, 1.0, 1.0)) == 4);
  }

  TEST_CASE("annotations follow the class") {
    for (int k = 1; k <= 3; ++k) {
      CHECK(std::string(to_string(LounestoClass{k}.annotation())) == "single-helicity");
    }
    CHECK(std::string(to_string(LounestoClass{4}.annotation())) == "dual-helicity");
    CHECK(std::string(to_string(LounestoClass{5}.annotation())) == "dual-helicity");
    CHECK(std::string(to_string(LounestoClass{6}.annotation())) == "Not well defined");
    CHECK_FALSE(LounestoClass{0}.classified());
  }

  TEST_CASE("vanishing bilinears are unclassifiable") {
    CHECK(lounesto_class(BilinearSet{}, 1.0).index == 0);
  }

  TEST_CASE("steering of single-helicity subclasses") {
    const Direction d{kPi / 3, kPi / 5};
    CHECK(class_of(build_single_helicity(kPP, 1.0, {1.0, 1.0}, d)) == 1);
    CHECK(class_of(build_single_helicity(kPP, 1.0, 1.0, d)) == 2);
    CHECK(class_of(build_single_helicity(kMM, 1.0, oracle::I, {kPi / 2, 0.0})) == 3);
  }

  TEST_CASE("library classes match the oracle on random spinors and families") {
    oracle::Rand rng(41);
    for (int i = 0; i < 2000; ++i) {
      const BiSpinor raw = rng.spinor();
      REQUIRE(class_of(raw) == oracle_class(raw));
      const BiSpinor sf = build_singular_form(rng.complex(), rng.complex(), rng.complex());
      REQUIRE(class_of(sf) == oracle_class(sf));
      REQUIRE(class_of(sf) >= 4);
      const BiSpinor w = build_weyl(i % 2 ? WeylSide::RightOnly : WeylSide::LeftOnly,
                                    Complex2Vector(rng.complex(), rng.complex()));
      REQUIRE(class_of(w) == 6);
      REQUIRE(oracle_class(w) == 6);
    }
  }

  TEST_CASE("class is invariant under complex rescaling") {
    oracle::Rand rng(42);
    for (int i = 0; i < 500; ++i) {
      const Complex lambda = rng.complex() * std::pow(10.0, rng.uniform(-6.0, 6.0));
      for (const BiSpinor& psi :
           {rng.spinor(), build_self_conjugate(1, rng.complex(), rng.complex()),
            build_single_helicity(kPP, 1.0, 1.0, {1.0, 2.0}),
            build_dual_helicity(kPM, rng.complex(), rng.complex(), {1.0, 2.0})}) {
        REQUIRE(class_of(psi) == class_of(BiSpinor(lambda * psi.components())));
      }
    }
  }

  TEST_CASE("helicity profile examples") {
    const Direction d{0.9, 1.7};
    const HelicityProfile single =
        helicity_profile(build_single_helicity(kPP, {0.3, 1.0}, 2.0, d), d);
    CHECK(single.right == BlockHelicity::Plus);
    CHECK(single.left == BlockHelicity::Plus);
    CHECK(single.category == HelicityCategory::Single);

    const HelicityProfile dual =
        helicity_profile(build_dual_helicity(kPM, 1.0, {0.0, 1.0}, d), d);
    CHECK(dual.right == BlockHelicity::Plus);
    CHECK(dual.left == BlockHelicity::Minus);
    CHECK(dual.category == HelicityCategory::Dual);

    const HelicityProfile weyl = helicity_profile(
        build_weyl(WeylSide::RightOnly, rest_spinor({Helicity::Plus, d, 1.0, 0.0})), d);
    CHECK(weyl.right == BlockHelicity::Plus);
    CHECK(weyl.left == BlockHelicity::NullBlock);
    CHECK(weyl.category == HelicityCategory::NotWellDefined);
    CHECK_FALSE(weyl.left_residual.has_value());
  }

  TEST_CASE("helicity profile of non-eigen blocks") {
    const HelicityProfile p = helicity_profile(BiSpinor(1.0, 1.0, 1.0, 0.0), {0.0, 0.0});
    CHECK(p.right == BlockHelicity::NotEigen);
    CHECK(p.left == BlockHelicity::Plus);
    CHECK(p.category == HelicityCategory::NonEigen);
    CHECK_THROWS_AS(helicity_profile(BiSpinor(), {0.0, 0.0}), DomainError);
  }

  TEST_CASE("classify_report on constructor output") {
    const ClassifyReport c2 =
        classify_report(build_single_helicity(kPP, 1.0, 1.0, {kPi / 3, kPi / 5}));
    CHECK(c2.lounesto.index == 2);
    REQUIRE(c2.helicity);
    CHECK(c2.helicity->category == HelicityCategory::Single);
    CHECK(c2.consistent());
    CHECK(c2.findings.empty());

    const ClassifyReport c5 = classify_report(
        build_self_conjugate(1, 0.0, 1.0).with_direction({0.0, 0.0}));
    CHECK(c5.lounesto.index == 5);
    REQUIRE(c5.helicity);
    CHECK(c5.helicity->category == HelicityCategory::Dual);
    CHECK(c5.consistent());
  }

  TEST_CASE("classify_report flags misaligned raw spinors") {
    oracle::Rand rng(43);
    for (int i = 0; i < 200; ++i) {
      const ClassifyReport r = classify_report(rng.spinor(), Direction{rng.theta(), rng.phi()});
      REQUIRE(r.lounesto.regular());
      REQUIRE(r.helicity->category == HelicityCategory::NonEigen);
      REQUIRE(has_finding(r, "helicity not aligned with supplied direction"));
      REQUIRE_FALSE(r.consistent());
    }
  }

  TEST_CASE("classify_report without a direction") {
    const ClassifyReport r = classify_report(BiSpinor(1.0, 0.0, 1.0, 0.0));
    CHECK_FALSE(r.helicity.has_value());
    CHECK(has_finding(r, "no direction supplied"));
    CHECK(r.lounesto.index == 2);
  }

  TEST_CASE("explicit direction overrides the provenance") {
    const BiSpinor psi = build_single_helicity(kPP, 1.0, 1.0, {kPi / 3, kPi / 5});
    const ClassifyReport r = classify_report(psi, Direction{kPi / 2, 0.0});
    CHECK(r.direction->theta == kPi / 2);
    CHECK(r.helicity->category == HelicityCategory::NonEigen);
  }

  TEST_CASE("dual category occurs only for singular spinors among eigenspinors") {
    oracle::Rand rng(44);
    for (int i = 0; i < 1000; ++i) {
      const Direction d{std::acos(rng.uniform(-0.999, 0.999)), rng.phi()};
      const BiSpinor dual = build_dual_helicity(kPM, rng.complex(), rng.complex(), d);
      const ClassifyReport r = classify_report(dual);
      REQUIRE(r.helicity->category == HelicityCategory::Dual);
      REQUIRE_FALSE(r.lounesto.regular());
    }
  }
}
