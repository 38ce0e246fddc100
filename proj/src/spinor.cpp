#include "spinorlab/spinor.hpp"

#include <cmath>

namespace spinorlab {

namespace {

// Below this, 1 +/- cos(theta) is treated as the pole itself.
constexpr double kPoleGuard = 1e-14;

double ratio_plus(Direction dir) {
  const double den = 1.0 + std::cos(dir.theta);
  if (den < kPoleGuard) {
    throw DomainError(DomainError::Kind::SingularAngle,
                      "positive-helicity block is singular at theta = pi");
  }
  return std::sin(dir.theta) / den;
}

double ratio_minus(Direction dir) {
  const double den = 1.0 - std::cos(dir.theta);
  if (den < kPoleGuard) {
    throw DomainError(DomainError::Kind::SingularAngle,
                      "negative-helicity block is singular at theta = 0");
  }
  return std::sin(dir.theta) / den;
}

// Second component over first for a helicity-h block along dir.
Complex lower_over_upper(Helicity h, Direction dir) {
  const Complex e = std::polar(1.0, dir.phi);
  return h == Helicity::Plus ? ratio_plus(dir) * e : -ratio_minus(dir) * e;
}

std::string pair_label(const char* family, HelicityPair pair) {
  return std::string(family) + "(" + to_symbol(pair.right) + "," +
         to_symbol(pair.left) + ")";
}

bool same_direction(Direction x, Direction y) {
  const Real3 u = x.unit();
  const Real3 v = y.unit();
  const double d2 = (u[0] - v[0]) * (u[0] - v[0]) +
                    (u[1] - v[1]) * (u[1] - v[1]) +
                    (u[2] - v[2]) * (u[2] - v[2]);
  return d2 < 1e-24;
}

}  // namespace

const char* to_symbol(Helicity h) noexcept {
  return h == Helicity::Plus ? "+" : "-";
}

std::string HelicityPair::label() const {
  return std::string(to_symbol(right)) + to_symbol(left);
}

const char* to_string(Family f) noexcept {
  switch (f) {
    case Family::Raw: return "raw";
    case Family::SingleHelicity: return "single_helicity";
    case Family::DualHelicity: return "dual_helicity";
    case Family::SingularForm: return "singular_form";
    case Family::SelfConjugate: return "self_conjugate";
    case Family::Weyl: return "weyl";
    case Family::ParityLinked: return "parity_linked";
  }
  return "unknown";
}

BiSpinor::BiSpinor(Complex a, Complex b, Complex c, Complex d, Provenance prov)
    : provenance_(std::move(prov)) {
  components_ << a, b, c, d;
}

BiSpinor::BiSpinor(const Complex4Vector& components, Provenance prov)
    : components_(components), provenance_(std::move(prov)) {}

BiSpinor BiSpinor::from_blocks(const Complex2Vector& right,
                               const Complex2Vector& left, Provenance prov) {
  return BiSpinor(right(0), right(1), left(0), left(1), std::move(prov));
}

BiSpinor BiSpinor::with_provenance(Provenance prov) const {
  return BiSpinor(components_, std::move(prov));
}

BiSpinor BiSpinor::with_direction(Direction dir) const {
  Provenance prov = provenance_;
  prov.direction = dir;
  return BiSpinor(components_, std::move(prov));
}

Complex2Vector rest_spinor(const RestSpinorSpec& spec) {
  if (!(spec.mass > 0.0)) {
    throw DomainError(DomainError::Kind::Massless,
                      "rest spinors need m > 0: no massless particle at rest");
  }
  const double half_t = spec.direction.theta / 2.0;
  const double half_p = spec.direction.phi / 2.0;
  const Complex pref = std::sqrt(spec.mass) * std::polar(1.0, spec.phase);
  const Complex lo = std::polar(1.0, -half_p);
  const Complex hi = std::polar(1.0, half_p);
  Complex2Vector v;
  if (spec.helicity == Helicity::Plus) {
    v << std::cos(half_t) * lo, std::sin(half_t) * hi;
  } else {
    v << std::sin(half_t) * lo, -std::cos(half_t) * hi;
  }
  return pref * v;
}

Complex2Vector boosted_block(const RestSpinorSpec& spec, Handedness handedness,
                             const FourMomentum& p) {
  if (p.pmag() > 0.0 && !same_direction(spec.direction, p.direction())) {
    throw DomainError(DomainError::Kind::DirectionMismatch,
                      "boost direction differs from the rest spinor direction");
  }
  if (std::abs(spec.mass - p.mass()) > 1e-12 * std::max(1.0, p.mass())) {
    throw DomainError(DomainError::Kind::InvalidArgument,
                      "rest spinor mass differs from the momentum mass");
  }
  return boost_block(handedness, p) * rest_spinor(spec);
}

BiSpinor build_single_helicity(HelicityPair pair, Complex a, Complex c,
                               Direction dir) {
  if (!pair.single()) {
    throw DomainError(DomainError::Kind::InvalidArgument,
                      "single-helicity spinors need pair (+,+) or (-,-)");
  }
  if (a == Complex{} && c == Complex{}) {
    throw DomainError(DomainError::Kind::ZeroSpinor,
                      "single-helicity spinor with a = c = 0");
  }
  const Complex r = lower_over_upper(pair.right, dir);
  return BiSpinor(a, a * r, c, c * r,
                  {Family::SingleHelicity, pair_label("single_helicity", pair),
                   dir, false});
}

BiSpinor build_dual_helicity(HelicityPair pair, Complex a, Complex c,
                             Direction dir) {
  if (pair.single()) {
    throw DomainError(DomainError::Kind::InvalidArgument,
                      "dual-helicity spinors need pair (+,-) or (-,+)");
  }
  if (a == Complex{} || c == Complex{}) {
    throw DomainError(DomainError::Kind::ZeroSpinor,
                      "dual-helicity spinor needs a != 0 and c != 0");
  }
  // Both poles are excluded, whichever block carries which sign.
  ratio_plus(dir);
  ratio_minus(dir);
  const Complex rr = lower_over_upper(pair.right, dir);
  const Complex rl = lower_over_upper(pair.left, dir);
  return BiSpinor(a, a * rr, c, c * rl,
                  {Family::DualHelicity, pair_label("dual_helicity", pair),
                   dir, false});
}

BiSpinor build_dual_partner(HelicityPair pair, Complex a, Complex c,
                            Direction dir) {
  return build_dual_helicity(pair.flipped(), c, a, dir);
}

BiSpinor build_singular_form(Complex b, Complex c, Complex d) {
  if (c == Complex{}) {
    throw DomainError(DomainError::Kind::InvalidArgument,
                      "singular form needs c != 0");
  }
  const Complex a = -b * c * std::conj(d) / std::norm(c);
  return BiSpinor(a, b, c, d, {Family::SingularForm, "singular_form", {}, false});
}

BiSpinor build_self_conjugate(int sign, Complex c, Complex d) {
  if (sign != 1 && sign != -1) {
    throw DomainError(DomainError::Kind::InvalidArgument,
                      "conjugation sign must be +1 or -1");
  }
  if (c == Complex{} && d == Complex{}) {
    throw DomainError(DomainError::Kind::ZeroSpinor,
                      "self-conjugate spinor with c = d = 0");
  }
  const Complex s = static_cast<double>(sign) * kI;
  return BiSpinor(-s * std::conj(d), s * std::conj(c), c, d,
                  {Family::SelfConjugate,
                   sign > 0 ? "self_conjugate(+1)" : "self_conjugate(-1)",
                   {}, false});
}

BiSpinor build_weyl(WeylSide which, const Complex2Vector& block) {
  if (block.isZero(0.0)) {
    throw DomainError(DomainError::Kind::ZeroSpinor, "Weyl spinor with zero block");
  }
  const Complex2Vector zero = Complex2Vector::Zero();
  if (which == WeylSide::RightOnly) {
    return BiSpinor::from_blocks(block, zero,
                                 {Family::Weyl, "weyl(right)", {}, false});
  }
  return BiSpinor::from_blocks(zero, block, {Family::Weyl, "weyl(left)", {}, false});
}

BiSpinor build_parity_linked(Helicity h, const FourMomentum& p, double phase) {
  const RestSpinorSpec spec{h, p.direction(), p.mass(), phase};
  return BiSpinor::from_blocks(
      boosted_block(spec, Handedness::Right, p),
      boosted_block(spec, Handedness::Left, p),
      {Family::ParityLinked,
       std::string("parity_linked(") + to_symbol(h) + ")", p.direction(),
       true});
}

BiSpinor boost_bispinor(const BiSpinor& rest, const FourMomentum& p) {
  Provenance prov = rest.provenance();
  prov.boosted = true;
  return BiSpinor::from_blocks(boost_block(Handedness::Right, p) * rest.right(),
                               boost_block(Handedness::Left, p) * rest.left(),
                               std::move(prov));
}

}  // namespace spinorlab
