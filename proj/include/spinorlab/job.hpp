#pragma once

// Job documents: parsing, execution and report rendering for the CLI.
// The schema is described in docs/job_schema.md.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "spinorlab/campaign.hpp"

namespace spinorlab {

/// Malformed or inconsistent job document (exit status 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { Classify, Symmetries, Sample, Verify };
enum class OutputFormat { Structured, Human };

const char* to_string(Mode m) noexcept;

struct MomentumSpec {
  double mass = 1.0;
  double pmag = 0.0;
  Direction direction;

  FourMomentum four_momentum() const { return {mass, pmag, direction}; }
};

/// Constructor invocation. Only the fields the family uses are set.
struct ConstructorSpec {
  Family family = Family::SingleHelicity;
  std::optional<std::string> pair;      // "++", "--", "+-", "-+"
  std::optional<Complex> a, b, c, d;
  std::optional<int> sign;              // self_conjugate: +1 or -1
  std::optional<std::string> side;      // weyl: "right" or "left"
  std::optional<Complex2Vector> block;  // weyl
  std::optional<std::string> helicity;  // parity_linked: "+" or "-"
  std::optional<double> phase;          // parity_linked
  std::optional<Direction> direction;
};

struct JobSpec {
  Mode mode = Mode::Classify;
  std::optional<Complex4Vector> components;
  std::optional<ConstructorSpec> constructor;
  std::optional<SampleFamily> sample_family;
  bool boost = false;
  std::optional<MomentumSpec> momentum;
  std::optional<Direction> direction;
  Tolerance tol;
  Phases phases;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> count;
};

/// Parses and validates a job document. Throws InputError with a
/// position-annotated message for malformed text.
JobSpec parse_job(const std::string& text);
JobSpec parse_job(const char* text);
JobSpec parse_job(const nlohmann::json& doc);

/// Canonical document for `job`; parse_job(job_to_json(job)) == job.
nlohmann::json job_to_json(const JobSpec& job);

struct Report {
  nlohmann::json body;
  /// False only when a verify-mode property failed.
  bool passed = true;
};

/// Runs the job. Domain errors propagate as DomainError.
Report run_job(const JobSpec& job);

std::string emit_report(const Report& report, OutputFormat format);

/// Structured error record for standard error.
std::string emit_error(const std::string& kind, const std::string& message);

/// Metric, gamma basis and bilinear sign conventions, embedded in reports.
nlohmann::json conventions();

}  // namespace spinorlab
