#include "spinorlab/classify.hpp"

#include <algorithm>
#include <cmath>

namespace spinorlab {

namespace {

template <std::size_t N>
double max_abs(const std::array<double, N>& xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}

struct BlockTest {
  BlockHelicity label;
  std::optional<double> residual;
};

BlockTest test_block(const Complex2Vector& block, const Matrix2& helicity_op,
                     double norm_squared, const Tolerance& tol) {
  const double bn2 = block.squaredNorm();
  if (bn2 <= tol.epsilon_class * norm_squared) {
    return {BlockHelicity::NullBlock, std::nullopt};
  }
  const Complex2Vector image = helicity_op * block;
  const double bn = std::sqrt(bn2);
  const double r_plus = (image - block).norm() / bn;
  const double r_minus = (image + block).norm() / bn;
  const double best = std::min(r_plus, r_minus);
  if (best >= tol.epsilon_helicity) return {BlockHelicity::NotEigen, best};
  return {r_plus <= r_minus ? BlockHelicity::Plus : BlockHelicity::Minus, best};
}

bool is_eigen(BlockHelicity h) {
  return h == BlockHelicity::Plus || h == BlockHelicity::Minus;
}

}  // namespace

const char* to_string(HelicityAnnotation a) noexcept {
  switch (a) {
    case HelicityAnnotation::SingleHelicity: return "single-helicity";
    case HelicityAnnotation::DualHelicity: return "dual-helicity";
    case HelicityAnnotation::NotWellDefined: return "Not well defined";
    case HelicityAnnotation::None: return "none";
  }
  return "none";
}

const char* to_string(BlockHelicity h) noexcept {
  switch (h) {
    case BlockHelicity::Plus: return "plus";
    case BlockHelicity::Minus: return "minus";
    case BlockHelicity::NullBlock: return "null_block";
    case BlockHelicity::NotEigen: return "not_eigen";
  }
  return "not_eigen";
}

const char* to_string(HelicityCategory c) noexcept {
  switch (c) {
    case HelicityCategory::Single: return "single";
    case HelicityCategory::Dual: return "dual";
    case HelicityCategory::NotWellDefined: return "not_well_defined";
    case HelicityCategory::NonEigen: return "non_eigen";
  }
  return "non_eigen";
}

HelicityAnnotation LounestoClass::annotation() const noexcept {
  if (index >= 1 && index <= 3) return HelicityAnnotation::SingleHelicity;
  if (index == 4 || index == 5) return HelicityAnnotation::DualHelicity;
  if (index == 6) return HelicityAnnotation::NotWellDefined;
  return HelicityAnnotation::None;
}

NonzeroPattern nonzero_pattern(const BilinearSet& bset, double norm_squared,
                               const Tolerance& tol) {
  const double limit = tol.epsilon_class * norm_squared;
  return {std::abs(bset.sigma) > limit, std::abs(bset.omega) > limit,
          max_abs(bset.K) > limit, max_abs(bset.S) > limit};
}

LounestoClass lounesto_class(const BilinearSet& bset, double norm_squared,
                             const Tolerance& tol) {
  const NonzeroPattern nz = nonzero_pattern(bset, norm_squared, tol);
  if (nz.sigma || nz.omega) {
    if (nz.sigma && nz.omega) return {1};
    return {nz.sigma ? 2 : 3};
  }
  if (nz.K && nz.S) return {4};
  if (nz.S) return {5};
  if (nz.K) return {6};
  return {0};
}

HelicityProfile helicity_profile(const BiSpinor& psi, Direction n,
                                 const Tolerance& tol) {
  if (psi.is_zero()) {
    throw DomainError(DomainError::Kind::ZeroSpinor,
                      "helicity profile of the zero spinor");
  }
  const Matrix2 op = pauli_dot(n);
  const double n2 = psi.norm_squared();
  const BlockTest r = test_block(psi.right(), op, n2, tol);
  const BlockTest l = test_block(psi.left(), op, n2, tol);

  HelicityProfile out;
  out.right = r.label;
  out.left = l.label;
  out.right_residual = r.residual;
  out.left_residual = l.residual;

  const bool r_null = r.label == BlockHelicity::NullBlock;
  const bool l_null = l.label == BlockHelicity::NullBlock;
  if (r_null != l_null) {
    out.category = HelicityCategory::NotWellDefined;
  } else if (is_eigen(r.label) && is_eigen(l.label)) {
    out.category = r.label == l.label ? HelicityCategory::Single
                                      : HelicityCategory::Dual;
  } else {
    out.category = HelicityCategory::NonEigen;
  }
  return out;
}

std::optional<HelicityCategory> expected_category(const LounestoClass& cls) {
  switch (cls.annotation()) {
    case HelicityAnnotation::SingleHelicity: return HelicityCategory::Single;
    case HelicityAnnotation::DualHelicity: return HelicityCategory::Dual;
    case HelicityAnnotation::NotWellDefined: return HelicityCategory::NotWellDefined;
    case HelicityAnnotation::None: return std::nullopt;
  }
  return std::nullopt;
}

bool ClassifyReport::consistent() const noexcept {
  if (!helicity) return false;
  const auto expected = expected_category(lounesto);
  return expected && *expected == helicity->category;
}

ClassifyReport classify_report(const BiSpinor& psi,
                               std::optional<Direction> direction,
                               const Tolerance& tol) {
  ClassifyReport rep;
  rep.bilinears = bilinear_set(psi, tol);
  rep.fpk = fpk_residuals(rep.bilinears);
  rep.lounesto = lounesto_class(rep.bilinears, psi.norm_squared(), tol);
  rep.direction = direction ? direction : psi.provenance().direction;

  if (!rep.lounesto.classified()) {
    rep.findings.emplace_back(
        "all bilinears test zero (unclassifiable): numerical degeneracy");
  }
  if (!rep.direction) {
    rep.findings.emplace_back(
        "no direction supplied: helicity profile not computed");
    return rep;
  }
  rep.helicity = helicity_profile(psi, *rep.direction, tol);

  const auto expected = expected_category(rep.lounesto);
  if (expected && *expected != rep.helicity->category) {
    if (rep.helicity->category == HelicityCategory::NonEigen) {
      rep.findings.emplace_back("helicity not aligned with supplied direction");
    } else {
      rep.findings.push_back(
          std::string("class ") + std::to_string(rep.lounesto.index) +
          " is annotated " + to_string(rep.lounesto.annotation()) +
          " but the measured helicity category is " +
          to_string(rep.helicity->category));
    }
  }
  return rep;
}

}  // namespace spinorlab
