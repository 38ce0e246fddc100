#include "spinorlab/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

namespace spinorlab {

void Tally::add(double value, bool ok) {
  ++draws;
  if (!ok) ++failures;
  max = std::max(max, value);
  min = std::min(min, value);
}

void Tally::merge(const Tally& other) {
  draws += other.draws;
  failures += other.failures;
  max = std::max(max, other.max);
  min = std::min(min, other.min);
}

// ---------------------------------------------------------------------------
// Sample mode

const char* to_string(SampleFamily f) noexcept {
  switch (f) {
    case SampleFamily::RandomRaw: return "random_raw";
    case SampleFamily::SingleHelicity: return "single_helicity";
    case SampleFamily::DualHelicity: return "dual_helicity";
    case SampleFamily::SelfConjugate: return "self_conjugate";
    case SampleFamily::Weyl: return "weyl";
    case SampleFamily::ParityLinked: return "parity_linked";
  }
  return "random_raw";
}

std::optional<SampleFamily> sample_family_from_string(const std::string& s) {
  for (auto f : {SampleFamily::RandomRaw, SampleFamily::SingleHelicity,
                 SampleFamily::DualHelicity, SampleFamily::SelfConjugate,
                 SampleFamily::Weyl, SampleFamily::ParityLinked}) {
    if (s == to_string(f)) return f;
  }
  return std::nullopt;
}

namespace {

std::size_t eigen_slot(const std::optional<int>& eigenvalue) {
  if (!eigenvalue) return 0;
  return *eigenvalue > 0 ? 1 : 2;
}

struct SampleDraw {
  BiSpinor psi;
  FourMomentum p;
  std::optional<BiSpinor> partner;
};

SampleDraw make_sample_draw(SampleFamily family, DrawRng& rng,
                            std::uint64_t index, const Phases& phases,
                            SampleMomentum mom) {
  auto momentum_along = [&](Direction dir) {
    return draw_momentum(rng, dir, mom.mass, mom.pmag_max / mom.mass);
  };
  switch (family) {
    case SampleFamily::RandomRaw: {
      BiSpinor psi = draw_raw(rng);
      const Direction dir = draw_direction(rng);
      return {psi.with_direction(dir), momentum_along(dir), std::nullopt};
    }
    case SampleFamily::SingleHelicity: {
      const auto steering = static_cast<Steering>(index % 3);
      const BiSpinor rest = draw_single_helicity(rng, steering).psi;
      const FourMomentum p = momentum_along(*rest.provenance().direction);
      return {boost_bispinor(rest, p), p, std::nullopt};
    }
    case SampleFamily::DualHelicity: {
      const DualHelicityDraw d = draw_dual_helicity(rng);
      const FourMomentum p = momentum_along(d.dir);
      return {boost_bispinor(d.psi, p), p, boost_bispinor(d.partner, p)};
    }
    case SampleFamily::SelfConjugate: {
      const BiSpinor rest = draw_self_conjugate_eigen(rng).psi;
      const FourMomentum p = momentum_along(*rest.provenance().direction);
      return {boost_bispinor(rest, p), p, std::nullopt};
    }
    case SampleFamily::Weyl: {
      const BiSpinor rest = draw_weyl_eigen(rng);
      const FourMomentum p = momentum_along(*rest.provenance().direction);
      return {boost_bispinor(rest, p), p, std::nullopt};
    }
    case SampleFamily::ParityLinked: {
      const Helicity h = rng.coin() ? Helicity::Plus : Helicity::Minus;
      const Direction dir = draw_direction(rng);
      const FourMomentum p = momentum_along(dir);
      const double phase = h == Helicity::Plus ? phases.theta1 : phases.theta2;
      return {build_parity_linked(h, p, phase), p, std::nullopt};
    }
  }
  throw DomainError(DomainError::Kind::InvalidArgument, "unknown sample family");
}

}  // namespace

void SampleStats::merge(const SampleStats& o) {
  draws += o.draws;
  for (std::size_t k = 0; k < class_counts.size(); ++k) class_counts[k] += o.class_counts[k];
  for (std::size_t k = 0; k < category_counts.size(); ++k) {
    category_counts[k] += o.category_counts[k];
  }
  inconsistent += o.inconsistent;
  for (std::size_t k = 0; k < fpk_max.size(); ++k) fpk_max[k] = std::max(fpk_max[k], o.fpk_max[k]);
  for (std::size_t k = 0; k < 3; ++k) {
    c_eigen_counts[k] += o.c_eigen_counts[k];
    parity_eigen_counts[k] += o.parity_eigen_counts[k];
  }
  dirac_plus_min = std::min(dirac_plus_min, o.dirac_plus_min);
  dirac_plus_max = std::max(dirac_plus_max, o.dirac_plus_max);
  dirac_minus_min = std::min(dirac_minus_min, o.dirac_minus_min);
  dirac_minus_max = std::max(dirac_minus_max, o.dirac_minus_max);
  flip_draws += o.flip_draws;
  flip_max = std::max(flip_max, o.flip_max);
  theta_link_max = std::max(theta_link_max, o.theta_link_max);
}

SampleStats run_sample(SampleFamily family, std::uint64_t seed,
                       std::uint64_t count, const Tolerance& tol,
                       const Phases& phases, SampleMomentum momentum,
                       Execution exec) {
  return reduce_draws<SampleStats>(
      count, exec, [&](std::uint64_t i, SampleStats& s) {
        DrawRng rng(seed, static_cast<std::uint64_t>(Stream::SampleMode) * 16 +
                              static_cast<std::uint64_t>(family),
                    i);
        const SampleDraw draw = make_sample_draw(family, rng, i, phases, momentum);
        const ClassifyReport cr = classify_report(draw.psi, std::nullopt, tol);
        const SymmetryReport sr =
            symmetry_report(draw.psi, draw.p, phases, tol, draw.partner);

        ++s.draws;
        ++s.class_counts[static_cast<std::size_t>(cr.lounesto.index)];
        if (cr.helicity) {
          ++s.category_counts[static_cast<std::size_t>(cr.helicity->category)];
        }
        if (cr.helicity && cr.helicity->category != HelicityCategory::NonEigen &&
            !cr.consistent()) {
          ++s.inconsistent;
        }
        s.fpk_max[0] = std::max(s.fpk_max[0], std::abs(cr.fpk.jj_minus_scalars));
        s.fpk_max[1] = std::max(s.fpk_max[1], std::abs(cr.fpk.j_dot_k));
        s.fpk_max[2] = std::max(s.fpk_max[2], std::abs(cr.fpk.jj_plus_kk));
        ++s.c_eigen_counts[eigen_slot(sr.conjugation.eigenvalue)];
        ++s.parity_eigen_counts[eigen_slot(sr.parity.eigenvalue)];
        s.dirac_plus_min = std::min(s.dirac_plus_min, sr.dirac_residual_plus);
        s.dirac_plus_max = std::max(s.dirac_plus_max, sr.dirac_residual_plus);
        s.dirac_minus_min = std::min(s.dirac_minus_min, sr.dirac_residual_minus);
        s.dirac_minus_max = std::max(s.dirac_minus_max, sr.dirac_residual_minus);
        if (sr.dirac_flip_residual) {
          ++s.flip_draws;
          s.flip_max = std::max(s.flip_max, *sr.dirac_flip_residual);
        }
        s.theta_link_max = std::max(s.theta_link_max, sr.theta_link_residual);
      });
}

// ---------------------------------------------------------------------------
// Property suite

namespace {

struct Check {
  double value;
  bool ok;
};

PropertyResult upper_bound(std::string name, double threshold, const Tally& t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "max < %.0e", threshold);
  return {std::move(name), buf, threshold, t.max, t.draws, t.failures,
          t.failures == 0};
}

PropertyResult lower_bound(std::string name, double threshold, const Tally& t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "min > %g", threshold);
  return {std::move(name), buf, threshold, t.min, t.draws, t.failures,
          t.failures == 0};
}

PropertyResult zero_failures(std::string name, const Tally& t) {
  return {std::move(name), "failures == 0", 0.0,
          static_cast<double>(t.failures), t.draws, t.failures, t.failures == 0};
}

double max_abs_entry(const Matrix4& m) { return m.cwiseAbs().maxCoeff(); }

bool in_range(int index, int lo, int hi) { return index >= lo && index <= hi; }

}  // namespace

std::vector<PropertyResult> run_property_suite(const SuiteOptions& opt) {
  const Tolerance& tol = opt.tol;
  const std::uint64_t seed = opt.seed;
  const Execution exec = opt.exec;
  auto n = [&](std::uint64_t fallback) { return opt.draws.value_or(fallback); };
  auto rng = [seed](Stream s, std::uint64_t i) {
    return DrawRng(seed, static_cast<std::uint64_t>(s), i);
  };

  std::vector<PropertyResult> out;

  {
    double worst = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = mu; nu < 4; ++nu) {
        const Matrix4 expected =
            (mu == nu ? 2.0 * metric(mu) : 0.0) * identity4();
        worst = std::max(worst,
                         max_abs_entry(anticommutator(gamma(mu), gamma(nu)) - expected));
      }
    }
    Tally t;
    t.add(worst, worst <= 1e-15);
    out.push_back(upper_bound("clifford_relations", 1e-15, t));
  }

  {
    Tally t;
    const Matrix2 th = wigner_theta();
    for (int k = 1; k <= 3; ++k) {
      const double r = (th * pauli(k).conjugate() * th.inverse() + pauli(k))
                           .cwiseAbs()
                           .maxCoeff();
      t.add(r, r <= 1e-15);
    }
    out.push_back(upper_bound("theta_conjugates_pauli", 1e-15, t));
  }

  out.push_back(upper_bound(
      "fpk_identities", 1e-10, sweep(n(kFpkDraws), exec, [&](std::uint64_t i) {
        DrawRng r = rng(Stream::Raw, i);
        const double v = fpk_residuals(bilinear_set(draw_raw(r), tol)).max_abs();
        return Check{v, v < 1e-10};
      })));

  out.push_back(upper_bound(
      "charge_conjugation_involution", 1e-15,
      sweep(n(kFamilyDraws), exec, [&](std::uint64_t i) {
        DrawRng r = rng(Stream::Raw, i);
        const BiSpinor psi = draw_raw(r);
        const double v =
            (charge_conjugate(charge_conjugate(psi)).components() - psi.components())
                .norm() /
            psi.components().norm();
        return Check{v, v <= 1e-15};
      })));

  out.push_back(upper_bound(
      "self_conjugate_eigenvalue", 1e-14,
      sweep(n(kFamilyDraws), exec, [&](std::uint64_t i) {
        DrawRng r = rng(Stream::SelfConjugate, i);
        const SelfConjugateDraw d = draw_self_conjugate(r);
        const ConjugationCheck cc = c_eigen_check(d.psi, tol);
        const double v = d.sign > 0 ? cc.residual_plus : cc.residual_minus;
        return Check{v, v < 1e-14 && cc.eigenvalue == d.sign};
      })));

  out.push_back(lower_bound(
      "single_helicity_not_c_eigen", tol.exact,
      sweep(n(kFamilyDraws), exec, [&](std::uint64_t i) {
        DrawRng r = rng(Stream::SingleHelicity, i);
        const BiSpinor psi = draw_single_helicity(r, static_cast<Steering>(i % 3)).psi;
        const ConjugationCheck cc = c_eigen_check(psi, tol);
        return Check{cc.residual(), !cc.eigenvalue.has_value()};
      })));

  {
    // Flag-dipole: phase pattern of a self-conjugate spinor, norms unbalanced.
    const BiSpinor fixture = build_singular_form({0.0, 2.0}, 1.0, 1.0);
    const ConjugationCheck cc = c_eigen_check(fixture, tol);
    const bool ok = !cc.eigenvalue && cc.constraints.phase_pattern_self &&
                    !cc.constraints.norm_balance;
    Tally t;
    t.add(ok ? 0.0 : 1.0, ok);
    out.push_back(zero_failures("norm_constraint_fixture", t));
  }

  out.push_back(upper_bound(
      "theta_link", 1e-12, sweep(n(kFamilyDraws), exec, [&](std::uint64_t i) {
        DrawRng r = rng(Stream::ThetaLink, i);
        const Direction dir = draw_direction(r);
        const FourMomentum p = draw_momentum(r, dir, draw_mass(r), kThetaLinkMaxRatio);
        Complex2Vector block;
        block << draw_amplitude(r), draw_amplitude(r);
        const Complex zeta = std::polar(1.0, r.uniform(0.0, 2.0 * kPi));
        const Handedness src = r.coin() ? Handedness::Left : Handedness::Right;
        const double v = theta_link_check(block, src, p, zeta);
        return Check{v, v < 1e-12};
      })));

  // Constructor-class table.
  out.push_back(zero_failures(
      "class_table/single_helicity", sweep(n(kFamilyDraws), exec, [&](std::uint64_t i) {
        DrawRng r = rng(Stream::SingleHelicity, i);
        const auto d = draw_single_helicity(r, static_cast<Steering>(i % 3));
        const int cls = lounesto_class(bilinear_set(d.psi, tol), d.psi.norm_squared(), tol).index;
        return Check{static_cast<double>(cls), cls == steered_class(d.steering)};
      })));
  out.push_back(zero_failures(
      "class_table/dual_helicity", sweep(n(kFamilyDraws), exec, [&](std::uint64_t i) {
        DrawRng r = rng(Stream::DualHelicity, i);
        const BiSpinor psi = draw_dual_helicity(r).psi;
        const int cls = lounesto_class(bilinear_set(psi, tol), psi.norm_squared(), tol).index;
        return Check{static_cast<double>(cls), in_range(cls, 4, 5)};
      })));
  out.push_back(zero_failures(
      "class_table/self_conjugate", sweep(n(kFamilyDraws), exec, [&](std::uint64_t i) {
        DrawRng r = rng(Stream::SelfConjugate, i);
        const BiSpinor psi = draw_self_conjugate(r).psi;
        const int cls = lounesto_class(bilinear_set(psi, tol), psi.norm_squared(), tol).index;
        return Check{static_cast<double>(cls), cls == 5};
      })));
  out.push_back(zero_failures(
      "class_table/weyl", sweep(n(kFamilyDraws), exec, [&](std::uint64_t i) {
        DrawRng r = rng(Stream::Weyl, i);
        const BiSpinor psi = draw_weyl(r);
        const int cls = lounesto_class(bilinear_set(psi, tol), psi.norm_squared(), tol).index;
        return Check{static_cast<double>(cls), cls == 6};
      })));

  // Helicity dichotomy: the measured category must match the class annotation.
  auto dichotomy = [&](std::string name, Stream stream, int lo, int hi,
                       std::function<BiSpinor(DrawRng&, std::uint64_t)> draw) {
    out.push_back(zero_failures(
        std::move(name), sweep(n(kFamilyDraws), exec, [&](std::uint64_t i) {
          DrawRng r = rng(stream, i);
          const ClassifyReport cr = classify_report(draw(r, i), std::nullopt, tol);
          const bool ok = in_range(cr.lounesto.index, lo, hi) && cr.consistent();
          return Check{static_cast<double>(cr.lounesto.index), ok};
        })));
  };
  dichotomy("helicity_dichotomy/single_helicity", Stream::SingleHelicity, 1, 3,
            [](DrawRng& r, std::uint64_t i) {
              return draw_single_helicity(r, static_cast<Steering>(i % 3)).psi;
            });
  dichotomy("helicity_dichotomy/dual_helicity", Stream::DualHelicity, 4, 5,
            [](DrawRng& r, std::uint64_t) { return draw_dual_helicity(r).psi; });
  dichotomy("helicity_dichotomy/self_conjugate", Stream::SelfConjugateEigenBlock, 5, 5,
            [](DrawRng& r, std::uint64_t) { return draw_self_conjugate_eigen(r).psi; });
  dichotomy("helicity_dichotomy/weyl", Stream::Weyl, 6, 6,
            [](DrawRng& r, std::uint64_t) { return draw_weyl_eigen(r); });

  out.push_back(upper_bound(
      "parity_linked_dirac", 1e-12, sweep(n(kFamilyDraws), exec, [&](std::uint64_t i) {
        DrawRng r = rng(Stream::ParityLinked, i);
        const Helicity h = r.coin() ? Helicity::Plus : Helicity::Minus;
        const Direction dir = draw_direction(r);
        const FourMomentum p = draw_momentum(r, dir, draw_mass(r), kParityLinkMaxRatio);
        const double phase = r.uniform(0.0, 2.0 * kPi);
        const double v = dirac_residual(build_parity_linked(h, p, phase), p, 1);
        return Check{v, v < 1e-12};
      })));

  auto boosted_dual = [&](std::uint64_t i) {
    DrawRng r = rng(Stream::DualHelicity, i);
    const DualHelicityDraw d = draw_dual_helicity(r);
    DrawRng rm = rng(Stream::DualHelicity, i + (std::uint64_t{1} << 40));
    const FourMomentum p = draw_momentum(rm, d.dir, draw_mass(rm), kDualMaxRatio);
    return std::make_tuple(boost_bispinor(d.psi, p), boost_bispinor(d.partner, p), p);
  };
  out.push_back(lower_bound(
      "dual_helicity_never_dirac", 0.1, sweep(n(kFamilyDraws), exec, [&](std::uint64_t i) {
        const auto [psi, partner, p] = boosted_dual(i);
        const double v = std::min(dirac_residual(psi, p, 1), dirac_residual(psi, p, -1));
        return Check{v, v > 0.1};
      })));
  out.push_back(upper_bound(
      "dual_helicity_dirac_flip", 1e-10, sweep(n(kFamilyDraws), exec, [&](std::uint64_t i) {
        const auto [psi, partner, p] = boosted_dual(i);
        const double v = std::max(dirac_flip_residual(psi, partner, p),
                                  dirac_flip_residual(partner, psi, p));
        return Check{v, v < 1e-10};
      })));

  out.push_back(upper_bound(
      "klein_gordon", 1e-12, sweep(n(kKleinGordonDraws), exec, [&](std::uint64_t i) {
        DrawRng r = rng(Stream::KleinGordon, i);
        const Direction dir = draw_direction(r);
        const FourMomentum p = draw_momentum(r, dir, draw_mass(r), kKleinGordonMaxRatio);
        const Matrix4 s = slash(p);
        const double m2 = p.mass() * p.mass();
        const double v = (s * s - m2 * identity4()).norm() / m2;
        return Check{v, v < 1e-12};
      })));

  return out;
}

bool all_passed(const std::vector<PropertyResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.passed; });
}

}  // namespace spinorlab
