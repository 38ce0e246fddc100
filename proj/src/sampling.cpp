#include "spinorlab/sampling.hpp"

#include <cmath>

namespace spinorlab {

namespace {

std::seed_seq make_seed(std::uint64_t seed, std::uint64_t stream,
                        std::uint64_t index) {
  auto lo = [](std::uint64_t x) { return static_cast<std::uint32_t>(x); };
  auto hi = [](std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); };
  return std::seed_seq{lo(seed), hi(seed), lo(stream), hi(stream),
                       lo(index), hi(index)};
}

Helicity draw_helicity(DrawRng& rng) {
  return rng.coin() ? Helicity::Plus : Helicity::Minus;
}

double draw_nonzero_real(DrawRng& rng) {
  for (;;) {
    const double r = rng.symmetric();
    if (std::abs(r) >= kMinAmplitude) return r;
  }
}

}  // namespace

DrawRng::DrawRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  auto seq = make_seed(seed, stream, index);
  engine_.seed(seq);
}

double DrawRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double DrawRng::symmetric() { return 2.0 * uniform() - 1.0; }

double DrawRng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

Complex DrawRng::complex_square() {
  const double re = symmetric();
  const double im = symmetric();
  return {re, im};
}

bool DrawRng::coin() { return (engine_() >> 63) != 0; }

Direction draw_direction(DrawRng& rng) {
  const double ct = rng.symmetric();
  const double phi = rng.uniform(0.0, 2.0 * kPi);
  return {std::acos(ct), phi};
}

Direction draw_regular_direction(DrawRng& rng) {
  for (;;) {
    const Direction d = draw_direction(rng);
    if (1.0 - std::abs(std::cos(d.theta)) >= kPoleMargin) return d;
  }
}

Complex draw_amplitude(DrawRng& rng) {
  for (;;) {
    const Complex z = rng.complex_square();
    if (std::abs(z) >= kMinAmplitude) return z;
  }
}

FourMomentum draw_momentum(DrawRng& rng, Direction dir, double mass,
                           double max_ratio) {
  return FourMomentum(mass, rng.uniform(0.0, max_ratio * mass), dir);
}

BiSpinor draw_raw(DrawRng& rng) {
  for (;;) {
    Complex4Vector v;
    for (int k = 0; k < 4; ++k) v(k) = rng.complex_square();
    if (v.squaredNorm() >= kMinNormSquared) return BiSpinor(v);
  }
}

int steered_class(Steering s) {
  switch (s) {
    case Steering::Generic: return 1;
    case Steering::RealProduct: return 2;
    case Steering::ImaginaryProduct: return 3;
  }
  return 0;
}

SingleHelicityDraw draw_single_helicity(DrawRng& rng, Steering steering) {
  const Helicity h = draw_helicity(rng);
  const Direction dir = draw_regular_direction(rng);
  const Complex a = draw_amplitude(rng);
  Complex c;
  switch (steering) {
    case Steering::Generic:
      for (;;) {
        c = draw_amplitude(rng);
        const Complex prod = std::conj(a) * c;
        const double scale = kMinAmplitude * std::abs(a) * std::abs(c);
        if (std::abs(prod.real()) >= scale && std::abs(prod.imag()) >= scale) break;
      }
      break;
    case Steering::RealProduct:
      c = draw_nonzero_real(rng) * a;
      break;
    case Steering::ImaginaryProduct:
      c = (kI * draw_nonzero_real(rng)) * a;
      break;
  }
  return {build_single_helicity({h, h}, a, c, dir), steering};
}

DualHelicityDraw draw_dual_helicity(DrawRng& rng) {
  const Helicity h = draw_helicity(rng);
  const HelicityPair pair{h, flip(h)};
  const Direction dir = draw_regular_direction(rng);
  const Complex a = draw_amplitude(rng);
  const Complex c = draw_amplitude(rng);
  return {pair, a, c, dir, build_dual_helicity(pair, a, c, dir),
          build_dual_partner(pair, a, c, dir)};
}

SelfConjugateDraw draw_self_conjugate(DrawRng& rng) {
  const int sign = rng.coin() ? 1 : -1;
  for (;;) {
    const Complex c = rng.complex_square();
    const Complex d = rng.complex_square();
    if (std::norm(c) + std::norm(d) >= kMinNormSquared) {
      return {build_self_conjugate(sign, c, d), sign};
    }
  }
}

SelfConjugateDraw draw_self_conjugate_eigen(DrawRng& rng) {
  const int sign = rng.coin() ? 1 : -1;
  const Helicity h = draw_helicity(rng);
  const Direction dir = draw_direction(rng);
  const Complex lambda = draw_amplitude(rng);
  const Complex2Vector block = lambda * rest_spinor({h, dir, 1.0, 0.0});
  return {build_self_conjugate(sign, block(0), block(1)).with_direction(dir),
          sign};
}

double draw_mass(DrawRng& rng) { return std::pow(10.0, rng.uniform(-2.0, 2.0)); }

BiSpinor draw_weyl(DrawRng& rng) {
  const WeylSide side = rng.coin() ? WeylSide::RightOnly : WeylSide::LeftOnly;
  for (;;) {
    Complex2Vector block;
    block << rng.complex_square(), rng.complex_square();
    if (block.squaredNorm() >= kMinNormSquared) return build_weyl(side, block);
  }
}

BiSpinor draw_weyl_eigen(DrawRng& rng) {
  const WeylSide side = rng.coin() ? WeylSide::RightOnly : WeylSide::LeftOnly;
  const Helicity h = draw_helicity(rng);
  const Direction dir = draw_direction(rng);
  const Complex lambda = draw_amplitude(rng);
  return build_weyl(side, lambda * rest_spinor({h, dir, 1.0, 0.0}))
      .with_direction(dir);
}

}  // namespace spinorlab
