#pragma once

#include <optional>
#include <string>

#include "spinorlab/algebra.hpp"

namespace spinorlab {

enum class Helicity : int { Minus = -1, Plus = 1 };

inline constexpr Helicity flip(Helicity h) {
  return h == Helicity::Plus ? Helicity::Minus : Helicity::Plus;
}
inline constexpr double to_double(Helicity h) { return static_cast<int>(h); }
const char* to_symbol(Helicity h) noexcept;  // "+" or "-"

/// Helicity labels of the (right, left) chiral blocks.
struct HelicityPair {
  Helicity right;
  Helicity left;

  bool single() const noexcept { return right == left; }
  HelicityPair flipped() const noexcept { return {flip(right), flip(left)}; }
  std::string label() const;  // "+-" style
};

/// Default rest-spinor phases: 0 for helicity +, pi for helicity -.
inline constexpr double kDefaultPhasePlus = 0.0;
inline constexpr double kDefaultPhaseMinus = kPi;

struct RestSpinorSpec {
  Helicity helicity = Helicity::Plus;
  Direction direction;
  double mass = 1.0;
  double phase = 0.0;
};

enum class Family {
  Raw,
  SingleHelicity,
  DualHelicity,
  SingularForm,
  SelfConjugate,
  Weyl,
  ParityLinked,
};

const char* to_string(Family f) noexcept;

/// Which constructor produced a spinor, and the direction its helicity
/// labels refer to (when it has one).
struct Provenance {
  Family family = Family::Raw;
  std::string label = "raw";
  std::optional<Direction> direction;
  bool boosted = false;
};

/// Four complex components (a, b, c, d): (a, b) is the right-handed block,
/// (c, d) the left-handed block. Values are stored exactly as given.
class BiSpinor {
 public:
  BiSpinor() : components_(Complex4Vector::Zero()) {}
  BiSpinor(Complex a, Complex b, Complex c, Complex d, Provenance prov = {});
  explicit BiSpinor(const Complex4Vector& components, Provenance prov = {});

  static BiSpinor from_blocks(const Complex2Vector& right,
                              const Complex2Vector& left, Provenance prov = {});

  Complex a() const { return components_(0); }
  Complex b() const { return components_(1); }
  Complex c() const { return components_(2); }
  Complex d() const { return components_(3); }

  Complex2Vector right() const { return components_.head<2>(); }
  Complex2Vector left() const { return components_.tail<2>(); }
  const Complex4Vector& components() const noexcept { return components_; }

  /// psi^dagger psi.
  double norm_squared() const { return components_.squaredNorm(); }
  bool is_zero() const { return components_.isZero(0.0); }

  const Provenance& provenance() const noexcept { return provenance_; }
  BiSpinor with_provenance(Provenance prov) const;
  BiSpinor with_direction(Direction dir) const;

 private:
  Complex4Vector components_;
  Provenance provenance_;
};

/// Helicity eigenstate at rest along `spec.direction`:
///   + : sqrt(m) e^{i phase} (cos(t/2) e^{-i p/2}, sin(t/2) e^{i p/2})
///   - : sqrt(m) e^{i phase} (sin(t/2) e^{-i p/2}, -cos(t/2) e^{i p/2})
/// Throws DomainError(Massless) for m <= 0.
Complex2Vector rest_spinor(const RestSpinorSpec& spec);

/// boost_block(handedness, p) applied to rest_spinor(spec). The momentum
/// direction must match the spec direction unless pmag = 0.
Complex2Vector boosted_block(const RestSpinorSpec& spec, Handedness handedness,
                             const FourMomentum& p);

/// psi(+,+) or psi(-,-): both blocks share the helicity along (theta, phi).
/// (+,+) is singular at theta = pi, (-,-) at theta = 0.
BiSpinor build_single_helicity(HelicityPair pair, Complex a, Complex c,
                               Direction dir);

/// Phi(+,-) or Phi(-,+): blocks carry opposite helicity. Singular at both
/// poles; a = 0 or c = 0 is rejected (that is a Weyl spinor).
BiSpinor build_dual_helicity(HelicityPair pair, Complex a, Complex c,
                             Direction dir);

/// The dual-helicity spinor the Dirac operator maps `pair(a, c)` onto:
/// opposite labels with the amplitudes exchanged.
BiSpinor build_dual_partner(HelicityPair pair, Complex a, Complex c,
                            Direction dir);

/// (-b c d*/|c|^2, b, c, d), the generic singular-spinor structure.
BiSpinor build_singular_form(Complex b, Complex c, Complex d);

/// sign = +1: (-i d*, i c*, c, d); sign = -1: (i d*, -i c*, c, d).
BiSpinor build_self_conjugate(int sign, Complex c, Complex d);

enum class WeylSide { RightOnly, LeftOnly };

/// (block, 0) or (0, block).
BiSpinor build_weyl(WeylSide which, const Complex2Vector& block);

/// (B_R phi(k), B_L phi(k)) with phi(k) = rest_spinor at the direction of p.
/// Parity links the two blocks, so this satisfies the Dirac equation.
BiSpinor build_parity_linked(Helicity h, const FourMomentum& p, double phase);

/// Boost a rest-frame bispinor blockwise: (B_R right, B_L left).
BiSpinor boost_bispinor(const BiSpinor& rest, const FourMomentum& p);

}  // namespace spinorlab
