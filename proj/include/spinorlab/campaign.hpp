#pragma once

// Sampling campaigns over independent draws.
//
// Each campaign is a reduction over draw indices 0..count-1. The serial path
// is the reference; the parallel path splits indices across OpenMP threads
// and merges per-thread accumulators. Accumulators only count and take
// max/min, so both paths give bitwise-identical results.

#include <array>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <omp.h>

#include "spinorlab/classify.hpp"
#include "spinorlab/sampling.hpp"
#include "spinorlab/symmetries.hpp"

namespace spinorlab {

enum class Execution { Serial, Parallel };

/// Runs accumulate(i, acc) for every i in [0, count) and merges the
/// accumulators. The first exception (lowest index) is rethrown after all
/// draws finish.
template <class Acc, class F>
Acc reduce_draws(std::uint64_t count, Execution exec, F&& accumulate) {
  Acc total{};
  std::exception_ptr error;
  std::uint64_t error_index = std::numeric_limits<std::uint64_t>::max();

  auto guarded = [&](std::uint64_t i, Acc& acc, std::exception_ptr& err,
                     std::uint64_t& err_index) {
    try {
      accumulate(i, acc);
    } catch (...) {
      if (i < err_index) {
        err = std::current_exception();
        err_index = i;
      }
    }
  };

  if (exec == Execution::Serial) {
    for (std::uint64_t i = 0; i < count; ++i) guarded(i, total, error, error_index);
  } else {
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel
    {
      Acc local{};
      std::exception_ptr local_error;
      std::uint64_t local_index = std::numeric_limits<std::uint64_t>::max();
#pragma omp for schedule(static) nowait
      for (std::int64_t i = 0; i < n; ++i) {
        guarded(static_cast<std::uint64_t>(i), local, local_error, local_index);
      }
#pragma omp critical(spinorlab_reduce_draws)
      {
        total.merge(local);
        if (local_error && local_index < error_index) {
          error = local_error;
          error_index = local_index;
        }
      }
    }
  }
  if (error) std::rethrow_exception(error);
  return total;
}

/// Pass/fail tally of a scalar check: extremes of the measured value and the
/// number of draws that failed.
struct Tally {
  std::uint64_t draws = 0;
  std::uint64_t failures = 0;
  double max = -std::numeric_limits<double>::infinity();
  double min = std::numeric_limits<double>::infinity();

  void add(double value, bool ok);
  void merge(const Tally& other);
};

/// Sweep `check(i) -> {value, ok}` over count draws.
template <class F>
Tally sweep(std::uint64_t count, Execution exec, F&& check) {
  return reduce_draws<Tally>(count, exec, [&](std::uint64_t i, Tally& t) {
    const auto [value, ok] = check(i);
    t.add(value, ok);
  });
}

// ---------------------------------------------------------------------------
// Sample mode

enum class SampleFamily {
  RandomRaw,
  SingleHelicity,
  DualHelicity,
  SelfConjugate,
  Weyl,
  ParityLinked,
};

const char* to_string(SampleFamily f) noexcept;
std::optional<SampleFamily> sample_family_from_string(const std::string& s);

/// Momentum distribution for sample draws: pmag uniform on
/// [0, pmag_max) with the draw's own direction.
struct SampleMomentum {
  double mass = 1.0;
  double pmag_max = 10.0;
};

struct SampleStats {
  std::uint64_t draws = 0;
  std::array<std::uint64_t, 7> class_counts{};  // [0] = unclassifiable
  std::array<std::uint64_t, 4> category_counts{};  // HelicityCategory order
  std::uint64_t inconsistent = 0;  // eigen spinors whose category contradicts the class
  std::array<double, 3> fpk_max{};
  std::array<std::uint64_t, 3> c_eigen_counts{};       // none, +1, -1
  std::array<std::uint64_t, 3> parity_eigen_counts{};  // none, +1, -1
  double dirac_plus_min = std::numeric_limits<double>::infinity();
  double dirac_plus_max = 0.0;
  double dirac_minus_min = std::numeric_limits<double>::infinity();
  double dirac_minus_max = 0.0;
  std::uint64_t flip_draws = 0;
  double flip_max = 0.0;
  double theta_link_max = 0.0;

  void merge(const SampleStats& other);
  bool operator==(const SampleStats&) const = default;
};

/// Draws `count` spinors of `family` and aggregates classification and
/// symmetry diagnostics.
SampleStats run_sample(SampleFamily family, std::uint64_t seed,
                       std::uint64_t count, const Tolerance& tol,
                       const Phases& phases, SampleMomentum momentum,
                       Execution exec);

// ---------------------------------------------------------------------------
// Property suite (verify mode)

struct PropertyResult {
  std::string name;
  std::string bound;       // e.g. "max < 1e-10", "failures == 0"
  double threshold = 0.0;
  double worst = 0.0;
  std::uint64_t draws = 0;
  std::uint64_t failures = 0;
  bool passed = false;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  Tolerance tol;
  Execution exec = Execution::Parallel;
  /// Replaces every per-property draw count when set.
  std::optional<std::uint64_t> draws;
};

/// Draw counts used by the suite unless overridden.
inline constexpr std::uint64_t kFpkDraws = 100000;
inline constexpr std::uint64_t kFamilyDraws = 10000;
inline constexpr std::uint64_t kKleinGordonDraws = 1000;

/// Momentum ranges (pmag / m) used by the boost-heavy properties.
inline constexpr double kParityLinkMaxRatio = 1e3;
inline constexpr double kThetaLinkMaxRatio = 1e3;
inline constexpr double kDualMaxRatio = 1e2;
inline constexpr double kKleinGordonMaxRatio = 10.0;

std::vector<PropertyResult> run_property_suite(const SuiteOptions& options);

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace spinorlab
