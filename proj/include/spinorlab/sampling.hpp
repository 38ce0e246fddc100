#pragma once

// Seeded random draws for property campaigns.
//
// Every draw owns an independent engine seeded from (seed, stream, index), so
// draw i is the same whatever order or thread evaluates it. Doubles are built
// from the top 53 bits of mt19937_64 output, which keeps the streams
// identical across standard library implementations.
//
// Distributions:
//   raw spinors   each of the 8 real degrees of freedom uniform on [-1, 1),
//                 rejecting psi^dagger psi < 1e-6
//   directions    cos(theta) uniform on [-1, 1), phi uniform on [0, 2 pi);
//                 "regular" directions also reject 1 - |cos(theta)| < 1e-6
//   amplitudes    real and imaginary parts uniform on [-1, 1), rejecting
//                 |z| < 1e-3
//   momenta       pmag uniform on [0, max_ratio * m) along a given direction

#include <cstdint>
#include <random>

#include "spinorlab/spinor.hpp"

namespace spinorlab {

class DrawRng {
 public:
  DrawRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

  double uniform();    // [0, 1)
  double symmetric();  // [-1, 1)
  double uniform(double lo, double hi);
  Complex complex_square();  // both parts uniform on [-1, 1)
  bool coin();

 private:
  std::mt19937_64 engine_;
};

/// Stream identifiers keep campaigns that share a seed independent.
enum class Stream : std::uint64_t {
  Raw = 1,
  SingleHelicity,
  DualHelicity,
  SelfConjugate,
  SelfConjugateEigenBlock,
  Weyl,
  ParityLinked,
  ThetaLink,
  KleinGordon,
  SampleMode,
};

inline constexpr double kMinNormSquared = 1e-6;
inline constexpr double kMinAmplitude = 1e-3;
inline constexpr double kPoleMargin = 1e-6;

Direction draw_direction(DrawRng& rng);
Direction draw_regular_direction(DrawRng& rng);
Complex draw_amplitude(DrawRng& rng);
FourMomentum draw_momentum(DrawRng& rng, Direction dir, double mass,
                           double max_ratio);

BiSpinor draw_raw(DrawRng& rng);

/// How the single-helicity amplitudes are tied together:
/// Generic draws a and c independently (Re and Im of a* c both away from 0),
/// RealProduct sets c = r a (a* c real), ImaginaryProduct sets c = i r a.
enum class Steering { Generic, RealProduct, ImaginaryProduct };

/// Lounesto class the steering rule selects for single-helicity spinors.
int steered_class(Steering s);

struct SingleHelicityDraw {
  BiSpinor psi;
  Steering steering;
};

SingleHelicityDraw draw_single_helicity(DrawRng& rng, Steering steering);

struct DualHelicityDraw {
  HelicityPair pair;
  Complex a;
  Complex c;
  Direction dir;
  BiSpinor psi;
  BiSpinor partner;  // build_dual_partner(pair, a, c, dir)
};

DualHelicityDraw draw_dual_helicity(DrawRng& rng);

struct SelfConjugateDraw {
  BiSpinor psi;
  int sign;
};

/// Self-conjugate (sign chosen at random) with unrestricted (c, d).
SelfConjugateDraw draw_self_conjugate(DrawRng& rng);

/// Self-conjugate spinor whose left block is a helicity eigenvector along a
/// random direction; the direction is recorded in the provenance.
SelfConjugateDraw draw_self_conjugate_eigen(DrawRng& rng);

/// Mass log-uniform on [1e-2, 1e2).
double draw_mass(DrawRng& rng);

/// Weyl spinor on a random side with a random block.
BiSpinor draw_weyl(DrawRng& rng);

/// Weyl spinor whose block is a rest spinor along a random direction,
/// recorded in the provenance.
BiSpinor draw_weyl_eigen(DrawRng& rng);

}  // namespace spinorlab
