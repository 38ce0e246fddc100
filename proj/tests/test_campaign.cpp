#include <stdexcept>

#include "doctest.h"
#include "spinorlab/campaign.hpp"

using namespace spinorlab;

namespace {

const SampleFamily kFamilies[] = {SampleFamily::RandomRaw,     SampleFamily::SingleHelicity,
                                  SampleFamily::DualHelicity,  SampleFamily::SelfConjugate,
                                  SampleFamily::Weyl,          SampleFamily::ParityLinked};

}  // namespace

TEST_SUITE("campaign") {
  TEST_CASE("draws depend only on (seed, stream, index)") {
    DrawRng a(7, 3, 1000), b(7, 3, 1000), c(7, 3, 1001), d(8, 3, 1000);
    const double x = a.uniform();
    CHECK(x == b.uniform());
    CHECK(x != c.uniform());
    CHECK(x != d.uniform());
    for (int i = 0; i < 1000; ++i) {
      const double u = a.uniform();
      REQUIRE(u >= 0.0);
      REQUIRE(u < 1.0);
    }
  }

  TEST_CASE("raw draws respect the rejection threshold") {
    for (std::uint64_t i = 0; i < 2000; ++i) {
      DrawRng rng(1, 1, i);
      const BiSpinor psi = draw_raw(rng);
      REQUIRE(psi.norm_squared() >= kMinNormSquared);
      for (int k = 0; k < 4; ++k) {
        REQUIRE(std::abs(psi.components()(k).real()) <= 1.0);
        REQUIRE(std::abs(psi.components()(k).imag()) <= 1.0);
      }
    }
  }

  TEST_CASE("directions stay inside the valid range") {
    for (std::uint64_t i = 0; i < 2000; ++i) {
      DrawRng rng(2, 1, i);
      const Direction d = draw_regular_direction(rng);
      REQUIRE(d.theta > 0.0);
      REQUIRE(d.theta < kPi);
      const FourMomentum p = draw_momentum(rng, d, draw_mass(rng), 10.0);
      REQUIRE(p.pmag() <= 10.0 * p.mass());
      REQUIRE(p.mass() >= 1e-2);
      REQUIRE(p.mass() < 1e2);
    }
  }

  TEST_CASE("sample mode: parallel and serial runs are identical") {
    for (SampleFamily f : kFamilies) {
      const SampleStats serial = run_sample(f, 42, 500, {}, {}, {}, Execution::Serial);
      const SampleStats parallel = run_sample(f, 42, 500, {}, {}, {}, Execution::Parallel);
      CHECK(serial == parallel);
      CHECK(serial.draws == 500);
    }
  }

  TEST_CASE("sample mode class frequencies per family") {
    const auto run = [](SampleFamily f) {
      return run_sample(f, 3, 600, {}, {}, {}, Execution::Parallel);
    };
    const SampleStats raw = run(SampleFamily::RandomRaw);
    CHECK(raw.class_counts[1] == 600);
    CHECK(raw.category_counts[static_cast<std::size_t>(HelicityCategory::NonEigen)] == 600);

    const SampleStats single = run(SampleFamily::SingleHelicity);
    CHECK(single.class_counts[1] == 200);
    CHECK(single.class_counts[2] == 200);
    CHECK(single.class_counts[3] == 200);
    CHECK(single.inconsistent == 0);

    const SampleStats dual = run(SampleFamily::DualHelicity);
    CHECK(dual.class_counts[4] + dual.class_counts[5] == 600);
    CHECK(dual.flip_draws == 600);
    CHECK(dual.flip_max < 1e-10);
    CHECK(dual.dirac_plus_min > 0.1);
    CHECK(dual.dirac_minus_min > 0.1);

    const SampleStats sc = run(SampleFamily::SelfConjugate);
    CHECK(sc.class_counts[5] == 600);
    CHECK(sc.c_eigen_counts[0] == 0);
    CHECK(sc.inconsistent == 0);

    const SampleStats weyl = run(SampleFamily::Weyl);
    CHECK(weyl.class_counts[6] == 600);

    const SampleStats pl = run(SampleFamily::ParityLinked);
    CHECK(pl.dirac_plus_max < 1e-12);
    CHECK(pl.parity_eigen_counts[1] == 600);

    for (const SampleStats* s : {&raw, &single, &dual, &sc, &weyl, &pl}) {
      for (double r : s->fpk_max) REQUIRE(r < 1e-10);
      REQUIRE(s->theta_link_max < 1e-12);
    }
  }

  TEST_CASE("family names round-trip") {
    for (SampleFamily f : kFamilies) {
      CHECK(sample_family_from_string(to_string(f)) == f);
    }
    CHECK_FALSE(sample_family_from_string("majorana").has_value());
  }

  TEST_CASE("sweep tallies are order independent") {
    auto check = [](std::uint64_t i) {
      DrawRng rng(5, 9, i);
      const double v = rng.uniform();
      return std::pair{v, v < 0.9};
    };
    const Tally s = sweep(10000, Execution::Serial, check);
    const Tally p = sweep(10000, Execution::Parallel, check);
    CHECK(s.draws == p.draws);
    CHECK(s.failures == p.failures);
    CHECK(s.max == p.max);
    CHECK(s.min == p.min);
    CHECK(s.failures > 0);
  }

  TEST_CASE("the lowest-index exception is rethrown") {
    for (Execution e : {Execution::Serial, Execution::Parallel}) {
      try {
        sweep(1000, e, [](std::uint64_t i) -> std::pair<double, bool> {
          if (i == 777 || i == 901) throw std::runtime_error(std::to_string(i));
          return {0.0, true};
        });
        FAIL("expected an exception");
      } catch (const std::runtime_error& err) {
        CHECK(std::string(err.what()) == "777");
      }
    }
  }

  TEST_CASE("property suite with reduced draws") {
    SuiteOptions opt;
    opt.draws = 300;
    const auto serial_opt = [&] {
      SuiteOptions o = opt;
      o.exec = Execution::Serial;
      return o;
    }();
    const auto parallel = run_property_suite(opt);
    const auto serial = run_property_suite(serial_opt);
    REQUIRE(parallel.size() == serial.size());
    for (std::size_t k = 0; k < parallel.size(); ++k) {
      CAPTURE(parallel[k].name);
      CHECK(parallel[k].passed);
      CHECK(parallel[k].worst == serial[k].worst);
      CHECK(parallel[k].failures == serial[k].failures);
    }
    CHECK(all_passed(parallel));
  }

  TEST_CASE("a tightened class threshold makes the suite fail") {
    SuiteOptions opt;
    opt.draws = 300;
    opt.tol.epsilon_class = 1e-30;
    CHECK_FALSE(all_passed(run_property_suite(opt)));
  }
}
