#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinorlab/bilinears.hpp"

namespace spinorlab {

enum class HelicityAnnotation { SingleHelicity, DualHelicity, NotWellDefined, None };

/// "single-helicity", "dual-helicity", "Not well defined", or "none".
const char* to_string(HelicityAnnotation a) noexcept;

/// Lounesto class 1..6, or 0 when the bilinears vanish identically.
struct LounestoClass {
  int index = 0;

  bool classified() const noexcept { return index >= 1 && index <= 6; }
  bool regular() const noexcept { return index >= 1 && index <= 3; }
  /// Classes 1-3 single-helicity, 4-5 dual-helicity, 6 not well defined.
  HelicityAnnotation annotation() const noexcept;
};

/// Which of sigma, omega, K, S test nonzero under the relative threshold
/// |q| > epsilon_class * psi^dagger psi (max-norm for K and S).
struct NonzeroPattern {
  bool sigma = false;
  bool omega = false;
  bool K = false;
  bool S = false;
};

NonzeroPattern nonzero_pattern(const BilinearSet& bset, double norm_squared,
                               const Tolerance& tol = {});

LounestoClass lounesto_class(const BilinearSet& bset, double norm_squared,
                             const Tolerance& tol = {});

enum class BlockHelicity { Plus, Minus, NullBlock, NotEigen };
enum class HelicityCategory { Single, Dual, NotWellDefined, NonEigen };

const char* to_string(BlockHelicity h) noexcept;
const char* to_string(HelicityCategory c) noexcept;

struct HelicityProfile {
  BlockHelicity right = BlockHelicity::NotEigen;
  BlockHelicity left = BlockHelicity::NotEigen;
  HelicityCategory category = HelicityCategory::NonEigen;
  // Smaller of the two relative eigen-residuals; absent for null blocks.
  std::optional<double> right_residual;
  std::optional<double> left_residual;
};

/// Tests each chiral block against sigma . n. Throws DomainError(ZeroSpinor).
HelicityProfile helicity_profile(const BiSpinor& psi, Direction n,
                                 const Tolerance& tol = {});

/// Category the class annotation predicts for a helicity-eigen spinor.
std::optional<HelicityCategory> expected_category(const LounestoClass& cls);

struct ClassifyReport {
  BilinearSet bilinears;
  FpkResiduals fpk;
  LounestoClass lounesto;
  std::optional<Direction> direction;
  std::optional<HelicityProfile> helicity;
  std::vector<std::string> findings;

  /// True when the class annotation agrees with the measured category.
  bool consistent() const noexcept;
};

/// Bilinears, FPK residuals, class and helicity profile in one record.
/// The direction defaults to the spinor's provenance; with neither, the
/// helicity profile is left out and a finding says so. Annotation/category
/// mismatches are recorded as findings, not thrown.
ClassifyReport classify_report(const BiSpinor& psi,
                               std::optional<Direction> direction = {},
                               const Tolerance& tol = {});

}  // namespace spinorlab
