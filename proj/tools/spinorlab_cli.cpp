// spinorlab: classify spinors, check their discrete symmetries, run seeded
// sampling campaigns and the invariant suite.
//
//   spinorlab --job job.json
//   echo '{"mode": "verify"}' | spinorlab --format human
//
// Exit status: 0 success, 2 input error, 3 domain error, 4 property failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"
#include "spinorlab/job.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitProperty = 4;

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int report_error(const std::string& kind, const std::string& message, int code) {
  std::cerr << spinorlab::emit_error(kind, message);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Momentum-space spin-1/2 spinor workbench"};
  std::string job_path;
  std::optional<std::string> mode;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> count;
  std::string format = "structured";
  std::optional<double> epsilon_class;
  std::optional<double> epsilon_helicity;
  std::optional<double> theta1;
  std::optional<double> theta2;

  app.add_option("--job", job_path, "Job document (default: standard input)");
  app.add_option("--mode", mode, "classify, symmetries, sample or verify")
      ->check(CLI::IsMember({"classify", "symmetries", "sample", "verify"}));
  app.add_option("--seed", seed, "Seed for sample and verify modes");
  app.add_option("--count", count, "Number of draws");
  app.add_option("--format", format, "structured or human")
      ->check(CLI::IsMember({"structured", "human"}));
  app.add_option("--epsilon-class", epsilon_class, "Zero threshold for bilinears");
  app.add_option("--epsilon-helicity", epsilon_helicity, "Helicity eigen-residual threshold");
  app.add_option("--theta1", theta1, "Rest-spinor phase for helicity +");
  app.add_option("--theta2", theta2, "Rest-spinor phase for helicity -");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("input", e.what(), kExitInput);
  }

  std::string text;
  if (!job_path.empty()) {
    std::ifstream in(job_path);
    if (!in) return report_error("input", "cannot open job file " + job_path, kExitInput);
    text = read_all(in);
  } else if (!isatty(STDIN_FILENO)) {
    text = read_all(std::cin);
  }
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    // Flags alone are enough for verify mode.
    if (mode == "verify") {
      text = "{}";
    } else {
      return report_error("input", "no job document (use --job or standard input)", kExitInput);
    }
  }

  try {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw spinorlab::InputError(std::string("malformed job document: ") + e.what());
    }
    if (!doc.is_object()) throw spinorlab::InputError("job: expected an object");
    if (mode) doc["mode"] = *mode;
    if (seed) doc["seed"] = *seed;
    if (count) doc["count"] = *count;
    if (epsilon_class) doc["tolerances"]["epsilon_class"] = *epsilon_class;
    if (epsilon_helicity) doc["tolerances"]["epsilon_helicity"] = *epsilon_helicity;
    if (theta1) doc["phases"]["theta1"] = *theta1;
    if (theta2) doc["phases"]["theta2"] = *theta2;

    const spinorlab::JobSpec job = spinorlab::parse_job(doc);
    const spinorlab::Report report = spinorlab::run_job(job);
    std::cout << spinorlab::emit_report(report, format == "human"
                                                    ? spinorlab::OutputFormat::Human
                                                    : spinorlab::OutputFormat::Structured);
    return report.passed ? 0 : kExitProperty;
  } catch (const spinorlab::InputError& e) {
    return report_error("input", e.what(), kExitInput);
  } catch (const spinorlab::DomainError& e) {
    return report_error(spinorlab::to_string(e.kind()), e.what(), kExitDomain);
  }
}
