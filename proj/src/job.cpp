#include "spinorlab/job.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <set>
#include <sstream>

#include "spinorlab/json_writer.hpp"

namespace spinorlab {

using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSampleCount = 1000;

[[noreturn]] void fail(const std::string& msg) { throw InputError(msg); }

// ---------------------------------------------------------------------------
// Field readers

double read_number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(where + ": must be finite");
  return x;
}

Complex read_complex(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) fail(where + ": expected [re, im]");
  return {read_number(v[0], where + "[0]"), read_number(v[1], where + "[1]")};
}

std::uint64_t read_unsigned(const json& v, const std::string& where) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  fail(where + ": expected a non-negative integer");
}

std::string read_string(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where + ": expected a string");
  return v.get<std::string>();
}

double read_theta(const json& v, const std::string& where) {
  const double t = read_number(v, where);
  if (t < 0.0 || t > kPi) fail(where + ": polar angle must lie in [0, pi]");
  return t;
}

void require_object(const json& v, const std::string& where,
                    const std::set<std::string>& allowed) {
  if (!v.is_object()) fail(where + ": expected an object");
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (!allowed.count(it.key())) fail(where + ": unknown key \"" + it.key() + "\"");
  }
}

Direction read_direction(const json& v, const std::string& where) {
  require_object(v, where, {"theta", "phi"});
  if (!v.contains("theta") || !v.contains("phi")) fail(where + ": needs theta and phi");
  return {read_theta(v["theta"], where + ".theta"), read_number(v["phi"], where + ".phi")};
}

std::optional<Mode> mode_from_string(const std::string& s) {
  if (s == "classify") return Mode::Classify;
  if (s == "symmetries") return Mode::Symmetries;
  if (s == "sample") return Mode::Sample;
  if (s == "verify") return Mode::Verify;
  return std::nullopt;
}

std::optional<Family> constructor_family(const std::string& s) {
  for (auto f : {Family::SingleHelicity, Family::DualHelicity, Family::SingularForm,
                 Family::SelfConjugate, Family::Weyl, Family::ParityLinked}) {
    if (s == to_string(f)) return f;
  }
  return std::nullopt;
}

// Parameter keys each constructor family takes at the top level.
struct FamilyKeys {
  std::set<std::string> required;
  std::set<std::string> optional;
};

FamilyKeys family_keys(Family f) {
  switch (f) {
    case Family::SingleHelicity:
    case Family::DualHelicity:
      return {{"pair", "a", "c", "theta", "phi"}, {}};
    case Family::SingularForm:
      return {{"b", "c", "d"}, {"theta", "phi"}};
    case Family::SelfConjugate:
      return {{"sign", "c", "d"}, {"theta", "phi"}};
    case Family::Weyl:
      return {{"side", "block"}, {"theta", "phi"}};
    case Family::ParityLinked:
      return {{"helicity"}, {"phase"}};
    case Family::Raw:
      break;
  }
  return {};
}

const std::set<std::string> kParameterKeys = {"pair", "a", "b", "c", "d", "sign", "side",
                                              "block", "helicity", "phase", "theta", "phi"};

const std::set<std::string> kTopLevelKeys = [] {
  std::set<std::string> k = {"mode",  "components", "family",     "boost",  "momentum",
                             "direction", "tolerances", "phases", "seed", "count"};
  k.insert(kParameterKeys.begin(), kParameterKeys.end());
  return k;
}();

HelicityPair parse_pair(const std::string& s, Family f) {
  const bool single = f == Family::SingleHelicity;
  if (single && s == "++") return {Helicity::Plus, Helicity::Plus};
  if (single && s == "--") return {Helicity::Minus, Helicity::Minus};
  if (!single && s == "+-") return {Helicity::Plus, Helicity::Minus};
  if (!single && s == "-+") return {Helicity::Minus, Helicity::Plus};
  fail(std::string("pair: \"") + s + "\" is not a valid label for " + to_string(f) +
       (single ? " (use \"++\" or \"--\")" : " (use \"+-\" or \"-+\")"));
}

Helicity parse_helicity(const std::string& s) {
  if (s == "+") return Helicity::Plus;
  if (s == "-") return Helicity::Minus;
  fail("helicity: expected \"+\" or \"-\"");
}

ConstructorSpec read_constructor(const json& doc, Family family) {
  const FamilyKeys keys = family_keys(family);
  for (const auto& k : kParameterKeys) {
    if (doc.contains(k) && !keys.required.count(k) && !keys.optional.count(k)) {
      fail(std::string("family ") + to_string(family) + " does not take \"" + k + "\"");
    }
  }
  for (const auto& k : keys.required) {
    if (!doc.contains(k)) {
      fail(std::string("family ") + to_string(family) + " requires \"" + k + "\"");
    }
  }

  ConstructorSpec c;
  c.family = family;
  if (doc.contains("pair")) {
    c.pair = read_string(doc["pair"], "pair");
    parse_pair(*c.pair, family);
  }
  if (doc.contains("a")) c.a = read_complex(doc["a"], "a");
  if (doc.contains("b")) c.b = read_complex(doc["b"], "b");
  if (doc.contains("c")) c.c = read_complex(doc["c"], "c");
  if (doc.contains("d")) c.d = read_complex(doc["d"], "d");
  if (doc.contains("sign")) {
    const json& s = doc["sign"];
    if (!s.is_number_integer() || (s.get<int>() != 1 && s.get<int>() != -1)) {
      fail("sign: expected 1 or -1");
    }
    c.sign = s.get<int>();
  }
  if (doc.contains("side")) {
    c.side = read_string(doc["side"], "side");
    if (*c.side != "right" && *c.side != "left") fail("side: expected \"right\" or \"left\"");
  }
  if (doc.contains("block")) {
    const json& b = doc["block"];
    if (!b.is_array() || b.size() != 2) fail("block: expected [[re, im], [re, im]]");
    Complex2Vector v;
    v << read_complex(b[0], "block[0]"), read_complex(b[1], "block[1]");
    c.block = v;
  }
  if (doc.contains("helicity")) {
    c.helicity = read_string(doc["helicity"], "helicity");
    parse_helicity(*c.helicity);
  }
  if (doc.contains("phase")) c.phase = read_number(doc["phase"], "phase");
  if (doc.contains("theta") != doc.contains("phi")) {
    fail("theta and phi must be given together");
  }
  if (doc.contains("theta")) {
    c.direction = Direction{read_theta(doc["theta"], "theta"), read_number(doc["phi"], "phi")};
  }
  return c;
}

MomentumSpec read_momentum(const json& v, Mode mode) {
  MomentumSpec m;
  if (mode == Mode::Sample) {
    require_object(v, "momentum", {"m", "pmag"});
    if (!v.contains("m") || !v.contains("pmag")) fail("momentum: needs m and pmag");
  } else {
    require_object(v, "momentum", {"m", "pmag", "theta", "phi"});
    if (!v.contains("m") || !v.contains("pmag")) fail("momentum: needs m and pmag");
    if (v.contains("theta") != v.contains("phi")) {
      fail("momentum: theta and phi must be given together");
    }
    if (v.contains("theta")) {
      m.direction = {read_theta(v["theta"], "momentum.theta"),
                     read_number(v["phi"], "momentum.phi")};
    }
  }
  m.mass = read_number(v["m"], "momentum.m");
  m.pmag = read_number(v["pmag"], "momentum.pmag");
  if (m.mass < 0.0) fail("momentum.m: must be non-negative");
  if (m.pmag < 0.0) fail("momentum.pmag: must be non-negative");
  if (mode == Mode::Sample && m.mass <= 0.0) fail("momentum.m: sample mode needs m > 0");
  return m;
}

Complex read_zeta(const json& v, const std::string& where) {
  const Complex z = read_complex(v, where);
  if (std::abs(std::abs(z) - 1.0) > 1e-12) fail(where + ": must have unit modulus");
  return z;
}

// ---------------------------------------------------------------------------
// Serialisation helpers

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json direction_json(Direction d) { return {{"theta", d.theta}, {"phi", d.phi}}; }

json components_json(const Complex4Vector& v) {
  json out = json::array();
  for (int k = 0; k < 4; ++k) out.push_back(complex_json(v(k)));
  return out;
}

json real4_json(const Real4& v) { return json::array({v[0], v[1], v[2], v[3]}); }

json optional_eigenvalue(const std::optional<int>& e) {
  return e ? json(*e) : json(nullptr);
}

// ---------------------------------------------------------------------------
// Spinor assembly

bool same_direction(Direction x, Direction y) {
  const Real3 u = x.unit(), v = y.unit();
  double d2 = 0.0;
  for (int k = 0; k < 3; ++k) d2 += (u[k] - v[k]) * (u[k] - v[k]);
  return d2 <= 1e-24;
}

struct Subject {
  BiSpinor psi;
  std::optional<BiSpinor> partner;
};

Subject build_subject(const JobSpec& job) {
  if (job.components) {
    BiSpinor psi(*job.components);
    if (job.boost) psi = boost_bispinor(psi, job.momentum->four_momentum());
    return {psi, std::nullopt};
  }
  const ConstructorSpec& c = *job.constructor;
  Subject s;
  switch (c.family) {
    case Family::SingleHelicity:
      s.psi = build_single_helicity(parse_pair(*c.pair, c.family), *c.a, *c.c, *c.direction);
      break;
    case Family::DualHelicity: {
      const HelicityPair pair = parse_pair(*c.pair, c.family);
      s.psi = build_dual_helicity(pair, *c.a, *c.c, *c.direction);
      s.partner = build_dual_partner(pair, *c.a, *c.c, *c.direction);
      break;
    }
    case Family::SingularForm:
      s.psi = build_singular_form(*c.b, *c.c, *c.d);
      break;
    case Family::SelfConjugate:
      s.psi = build_self_conjugate(*c.sign, *c.c, *c.d);
      break;
    case Family::Weyl:
      s.psi = build_weyl(*c.side == "right" ? WeylSide::RightOnly : WeylSide::LeftOnly,
                         *c.block);
      break;
    case Family::ParityLinked: {
      const Helicity h = parse_helicity(*c.helicity);
      const double phase =
          c.phase.value_or(h == Helicity::Plus ? job.phases.theta1 : job.phases.theta2);
      s.psi = build_parity_linked(h, job.momentum->four_momentum(), phase);
      return s;
    }
    case Family::Raw:
      break;
  }
  if (c.direction && c.family != Family::SingleHelicity &&
      c.family != Family::DualHelicity) {
    s.psi = s.psi.with_direction(*c.direction);
  }
  if (job.boost) {
    const FourMomentum p = job.momentum->four_momentum();
    const auto& dir = s.psi.provenance().direction;
    if (dir && p.pmag() > 0.0 && !same_direction(*dir, p.direction())) {
      throw DomainError(DomainError::Kind::DirectionMismatch,
                        "boost direction differs from the constructor's helicity direction");
    }
    s.psi = boost_bispinor(s.psi, p);
    if (s.partner) s.partner = boost_bispinor(*s.partner, p);
  }
  return s;
}

json provenance_json(const Provenance& p) {
  json out = {{"family", to_string(p.family)}, {"label", p.label}, {"boosted", p.boosted}};
  out["direction"] = p.direction ? direction_json(*p.direction) : json(nullptr);
  return out;
}

json bilinears_json(const BilinearSet& b) {
  json s = json::object();
  for (std::size_t k = 0; k < kTensorIndices.size(); ++k) {
    s[std::to_string(kTensorIndices[k][0]) + std::to_string(kTensorIndices[k][1])] = b.S[k];
  }
  return {{"sigma", b.sigma}, {"omega", b.omega}, {"J", real4_json(b.J)},
          {"K", real4_json(b.K)}, {"S", s}};
}

json optional_double(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

json classification_json(const ClassifyReport& r) {
  json out;
  out["bilinears"] = bilinears_json(r.bilinears);
  out["fpk_residuals"] = {{"jj_minus_scalars", r.fpk.jj_minus_scalars},
                          {"j_dot_k", r.fpk.j_dot_k},
                          {"jj_plus_kk", r.fpk.jj_plus_kk}};
  out["lounesto"] = {{"class", r.lounesto.index},
                     {"annotation", to_string(r.lounesto.annotation())}};
  if (r.helicity) {
    const HelicityProfile& h = *r.helicity;
    out["helicity"] = {{"direction", direction_json(*r.direction)},
                       {"right", to_string(h.right)},
                       {"left", to_string(h.left)},
                       {"category", to_string(h.category)},
                       {"right_residual", optional_double(h.right_residual)},
                       {"left_residual", optional_double(h.left_residual)}};
  } else {
    out["helicity"] = nullptr;
  }
  out["consistent"] = r.consistent();
  out["findings"] = r.findings;
  return out;
}

json phases_json(const Phases& p) {
  return {{"theta1", p.theta1}, {"theta2", p.theta2},
          {"zeta1", complex_json(p.zeta1)}, {"zeta2", complex_json(p.zeta2)}};
}

json symmetries_json(const SymmetryReport& s) {
  const ConjugacyConstraints& k = s.conjugation.constraints;
  return {
      {"parity", {{"eigenvalue", optional_eigenvalue(s.parity.eigenvalue)},
                  {"residual_plus", s.parity.residual_plus},
                  {"residual_minus", s.parity.residual_minus}}},
      {"charge_conjugation", {{"eigenvalue", optional_eigenvalue(s.conjugation.eigenvalue)},
                              {"residual_plus", s.conjugation.residual_plus},
                              {"residual_minus", s.conjugation.residual_minus},
                              {"constraints", {{"phase_pattern_self", k.phase_pattern_self},
                                               {"phase_pattern_anti", k.phase_pattern_anti},
                                               {"norm_balance", k.norm_balance}}}}},
      {"dirac_residual", {{"plus", s.dirac_residual_plus}, {"minus", s.dirac_residual_minus}}},
      {"dirac_flip_residual", optional_double(s.dirac_flip_residual)},
      {"theta_link_residual", s.theta_link_residual},
      {"phases", phases_json(s.phases)}};
}

json min_max(double lo, double hi) { return {{"min", lo}, {"max", hi}}; }

json eigen_counts(const std::array<std::uint64_t, 3>& c) {
  return {{"none", c[0]}, {"+1", c[1]}, {"-1", c[2]}};
}

json sample_json(const JobSpec& job, const SampleStats& s, SampleMomentum mom) {
  json classes = json::object();
  for (std::size_t k = 0; k < s.class_counts.size(); ++k) {
    classes[std::to_string(k)] = s.class_counts[k];
  }
  json categories = json::object();
  for (auto c : {HelicityCategory::Single, HelicityCategory::Dual,
                 HelicityCategory::NotWellDefined, HelicityCategory::NonEigen}) {
    categories[to_string(c)] = s.category_counts[static_cast<std::size_t>(c)];
  }
  return {{"family", to_string(*job.sample_family)},
          {"draws", s.draws},
          {"momentum", {{"m", mom.mass}, {"pmag_max", mom.pmag_max}}},
          {"class_counts", classes},
          {"category_counts", categories},
          {"inconsistent", s.inconsistent},
          {"fpk_max", {{"jj_minus_scalars", s.fpk_max[0]},
                       {"j_dot_k", s.fpk_max[1]},
                       {"jj_plus_kk", s.fpk_max[2]}}},
          {"c_eigen_counts", eigen_counts(s.c_eigen_counts)},
          {"parity_eigen_counts", eigen_counts(s.parity_eigen_counts)},
          {"dirac_residual", {{"plus", min_max(s.dirac_plus_min, s.dirac_plus_max)},
                              {"minus", min_max(s.dirac_minus_min, s.dirac_minus_max)}}},
          {"dirac_flip", {{"draws", s.flip_draws}, {"max", s.flip_max}}},
          {"theta_link_max", s.theta_link_max}};
}

json verify_json(const std::vector<PropertyResult>& results) {
  json props = json::array();
  for (const auto& r : results) {
    props.push_back({{"name", r.name},
                     {"bound", r.bound},
                     {"threshold", r.threshold},
                     {"worst", r.worst},
                     {"draws", r.draws},
                     {"failures", r.failures},
                     {"passed", r.passed}});
  }
  return {{"properties", props}, {"passed", all_passed(results)}};
}

// ---------------------------------------------------------------------------
// Human format

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string fmt(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_number_float()) return fmt(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Space-separated values of an array, or key=value pairs of an object.
std::string joined(const json& v) {
  std::string out;
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (!out.empty()) out += " ";
    if (v.is_object()) out += it.key() + "=";
    out += it.value().is_number_unsigned() ? std::to_string(it.value().get<std::uint64_t>())
                                           : fmt(it.value());
  }
  return out;
}

void human_classification(std::ostringstream& os, const json& b) {
  const json& bl = b["bilinears"];
  os << "Bilinear covariants\n";
  os << "  sigma  " << fmt(bl["sigma"]) << "\n";
  os << "  omega  " << fmt(bl["omega"]) << "\n";
  for (const char* v : {"J", "K"}) {
    os << "  " << v << "      " << joined(bl[v]) << "\n";
  }
  os << "  S      " << joined(bl["S"]) << "\n";
  const json& f = b["fpk_residuals"];
  os << "FPK residuals  J.J-s^2-w^2 " << fmt(f["jj_minus_scalars"]) << "  J.K "
     << fmt(f["j_dot_k"]) << "  J.J+K.K " << fmt(f["jj_plus_kk"]) << "\n";
  const json& l = b["lounesto"];
  os << "Lounesto class " << l["class"].get<int>() << "  (" << fmt(l["annotation"]) << ")\n";
  const json& h = b["helicity"];
  if (h.is_null()) {
    os << "Helicity       not computed\n";
  } else {
    os << "Helicity       right " << fmt(h["right"]) << ", left " << fmt(h["left"])
       << ", category " << fmt(h["category"]) << "\n";
  }
  for (const auto& msg : b["findings"]) os << "Finding        " << fmt(msg) << "\n";
}

void human_symmetries(std::ostringstream& os, const json& s) {
  os << "Symmetries\n";
  os << "  parity eigenvalue       " << fmt(s["parity"]["eigenvalue"]) << "  (residual +1 "
     << fmt(s["parity"]["residual_plus"]) << ", -1 " << fmt(s["parity"]["residual_minus"])
     << ")\n";
  const json& c = s["charge_conjugation"];
  os << "  C eigenvalue            " << fmt(c["eigenvalue"]) << "  (residual +1 "
     << fmt(c["residual_plus"]) << ", -1 " << fmt(c["residual_minus"]) << ")\n";
  os << "  C constraints           phase(self) " << fmt(c["constraints"]["phase_pattern_self"])
     << ", phase(anti) " << fmt(c["constraints"]["phase_pattern_anti"]) << ", norms "
     << fmt(c["constraints"]["norm_balance"]) << "\n";
  os << "  Dirac residual +m / -m  " << fmt(s["dirac_residual"]["plus"]) << " / "
     << fmt(s["dirac_residual"]["minus"]) << "\n";
  os << "  Dirac flip residual     " << fmt(s["dirac_flip_residual"]) << "\n";
  os << "  Theta-link residual     " << fmt(s["theta_link_residual"]) << "\n";
}

void human_sample(std::ostringstream& os, const json& s) {
  static const char* const kAnnotation[] = {"unclassifiable", "single-helicity",
                                            "single-helicity", "single-helicity",
                                            "dual-helicity",   "dual-helicity",
                                            "Not well defined"};
  os << "Sample  family " << fmt(s["family"]) << ", " << s["draws"].get<std::uint64_t>()
     << " draws\n";
  os << "  class  count     annotation\n";
  for (int k = 0; k <= 6; ++k) {
    char line[96];
    std::snprintf(line, sizeof line, "  %-5d  %-8llu  %s\n", k,
                  static_cast<unsigned long long>(
                      s["class_counts"][std::to_string(k)].get<std::uint64_t>()),
                  kAnnotation[k]);
    os << line;
  }
  os << "  helicity categories  " << joined(s["category_counts"]) << "\n";
  os << "  inconsistent         " << s["inconsistent"].get<std::uint64_t>() << "\n";
  os << "  max FPK residuals    " << joined(s["fpk_max"]) << "\n";
  os << "  C eigen counts       " << joined(s["c_eigen_counts"]) << "\n";
  os << "  parity eigen counts  " << joined(s["parity_eigen_counts"]) << "\n";
  os << "  Dirac residual +m    [" << fmt(s["dirac_residual"]["plus"]["min"]) << ", "
     << fmt(s["dirac_residual"]["plus"]["max"]) << "]\n";
  os << "  Dirac residual -m    [" << fmt(s["dirac_residual"]["minus"]["min"]) << ", "
     << fmt(s["dirac_residual"]["minus"]["max"]) << "]\n";
  os << "  theta-link max       " << fmt(s["theta_link_max"]) << "\n";
}

void human_verify(std::ostringstream& os, const json& v) {
  os << "Property                                  result  worst          bound\n";
  for (const auto& p : v["properties"]) {
    char line[160];
    std::snprintf(line, sizeof line, "%-40s  %-6s  %-13s  %s\n",
                  p["name"].get<std::string>().c_str(), p["passed"].get<bool>() ? "PASS" : "FAIL",
                  fmt(p["worst"]).c_str(), p["bound"].get<std::string>().c_str());
    os << line;
  }
  os << (v["passed"].get<bool>() ? "all properties passed\n" : "some properties FAILED\n");
}

}  // namespace

const char* to_string(Mode m) noexcept {
  switch (m) {
    case Mode::Classify: return "classify";
    case Mode::Symmetries: return "symmetries";
    case Mode::Sample: return "sample";
    case Mode::Verify: return "verify";
  }
  return "classify";
}

JobSpec parse_job(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed job document: ") + e.what());
  }
  return parse_job(doc);
}

JobSpec parse_job(const char* text) { return parse_job(std::string(text)); }

JobSpec parse_job(const json& doc) {
  require_object(doc, "job", kTopLevelKeys);
  JobSpec job;
  if (doc.contains("mode")) {
    const std::string m = read_string(doc["mode"], "mode");
    const auto mode = mode_from_string(m);
    if (!mode) fail("mode: unknown mode \"" + m + "\"");
    job.mode = *mode;
  }

  if (doc.contains("tolerances")) {
    const json& t = doc["tolerances"];
    require_object(t, "tolerances", {"epsilon_class", "epsilon_helicity"});
    if (t.contains("epsilon_class")) {
      job.tol.epsilon_class = read_number(t["epsilon_class"], "tolerances.epsilon_class");
    }
    if (t.contains("epsilon_helicity")) {
      job.tol.epsilon_helicity =
          read_number(t["epsilon_helicity"], "tolerances.epsilon_helicity");
    }
    if (job.tol.epsilon_class <= 0.0 || job.tol.epsilon_helicity <= 0.0) {
      fail("tolerances: must be positive");
    }
  }
  if (doc.contains("phases")) {
    const json& p = doc["phases"];
    require_object(p, "phases", {"theta1", "theta2", "zeta1", "zeta2"});
    if (p.contains("theta1")) job.phases.theta1 = read_number(p["theta1"], "phases.theta1");
    if (p.contains("theta2")) job.phases.theta2 = read_number(p["theta2"], "phases.theta2");
    if (p.contains("zeta1")) job.phases.zeta1 = read_zeta(p["zeta1"], "phases.zeta1");
    if (p.contains("zeta2")) job.phases.zeta2 = read_zeta(p["zeta2"], "phases.zeta2");
  }
  if (doc.contains("seed")) job.seed = read_unsigned(doc["seed"], "seed");
  if (doc.contains("count")) {
    job.count = read_unsigned(doc["count"], "count");
    if (*job.count < 1) fail("count: must be at least 1");
  }
  if (doc.contains("boost")) {
    if (!doc["boost"].is_boolean()) fail("boost: expected true or false");
    job.boost = doc["boost"].get<bool>();
  }
  if (doc.contains("momentum")) job.momentum = read_momentum(doc["momentum"], job.mode);
  if (doc.contains("direction")) job.direction = read_direction(doc["direction"], "direction");

  const bool has_components = doc.contains("components");
  const bool has_family = doc.contains("family");

  if (job.mode == Mode::Verify) {
    for (const char* k : {"components", "family", "momentum", "direction", "boost"}) {
      if (doc.contains(k)) fail(std::string("verify mode does not take \"") + k + "\"");
    }
    for (const auto& k : kParameterKeys) {
      if (doc.contains(k)) fail("verify mode does not take \"" + k + "\"");
    }
    return job;
  }

  if (job.mode == Mode::Sample) {
    if (has_components) fail("sample mode draws its own spinors; remove \"components\"");
    if (!has_family) fail("sample mode requires \"family\"");
    for (const auto& k : kParameterKeys) {
      if (doc.contains(k)) fail("sample mode does not take \"" + k + "\"");
    }
    for (const char* k : {"direction", "boost"}) {
      if (doc.contains(k)) fail(std::string("sample mode does not take \"") + k + "\"");
    }
    const std::string name = read_string(doc["family"], "family");
    job.sample_family = sample_family_from_string(name);
    if (!job.sample_family) fail("family: unknown sample family \"" + name + "\"");
    if (!job.count) job.count = kDefaultSampleCount;
    return job;
  }

  if (has_components == has_family) {
    fail("exactly one input form is required: \"components\" or \"family\"");
  }
  if (doc.contains("count")) fail("\"count\" is only used in sample and verify modes");

  if (has_components) {
    for (const auto& k : kParameterKeys) {
      if (doc.contains(k)) fail("raw components do not take \"" + k + "\"");
    }
    const json& c = doc["components"];
    if (!c.is_array() || c.size() != 4) fail("components: expected four [re, im] pairs");
    Complex4Vector v;
    for (int k = 0; k < 4; ++k) {
      v(k) = read_complex(c[static_cast<std::size_t>(k)],
                          "components[" + std::to_string(k) + "]");
    }
    job.components = v;
  } else {
    const std::string name = read_string(doc["family"], "family");
    const auto family = constructor_family(name);
    if (!family) fail("family: unknown constructor family \"" + name + "\"");
    job.constructor = read_constructor(doc, *family);
    if (*family == Family::ParityLinked) {
      if (!job.momentum) fail("parity_linked spinors are built at a momentum; give \"momentum\"");
      if (job.boost) fail("parity_linked spinors are already boosted; remove \"boost\"");
    }
  }

  if (job.boost && !job.momentum) fail("boost requested without \"momentum\"");
  if (job.mode == Mode::Symmetries && !job.momentum) {
    fail("momentum required for Dirac residual");
  }
  return job;
}

json job_to_json(const JobSpec& job) {
  json out;
  out["mode"] = to_string(job.mode);
  out["tolerances"] = {{"epsilon_class", job.tol.epsilon_class},
                       {"epsilon_helicity", job.tol.epsilon_helicity}};
  out["phases"] = phases_json(job.phases);
  out["seed"] = job.seed;
  if (job.count) out["count"] = *job.count;
  if (job.mode == Mode::Verify) return out;

  if (job.momentum) {
    out["momentum"] = {{"m", job.momentum->mass}, {"pmag", job.momentum->pmag}};
    if (job.mode != Mode::Sample) {
      out["momentum"]["theta"] = job.momentum->direction.theta;
      out["momentum"]["phi"] = job.momentum->direction.phi;
    }
  }
  if (job.mode == Mode::Sample) {
    out["family"] = to_string(*job.sample_family);
    return out;
  }
  out["boost"] = job.boost;
  if (job.direction) out["direction"] = direction_json(*job.direction);
  if (job.components) {
    out["components"] = components_json(*job.components);
    return out;
  }
  const ConstructorSpec& c = *job.constructor;
  out["family"] = to_string(c.family);
  if (c.pair) out["pair"] = *c.pair;
  if (c.a) out["a"] = complex_json(*c.a);
  if (c.b) out["b"] = complex_json(*c.b);
  if (c.c) out["c"] = complex_json(*c.c);
  if (c.d) out["d"] = complex_json(*c.d);
  if (c.sign) out["sign"] = *c.sign;
  if (c.side) out["side"] = *c.side;
  if (c.block) out["block"] = {complex_json((*c.block)(0)), complex_json((*c.block)(1))};
  if (c.helicity) out["helicity"] = *c.helicity;
  if (c.phase) out["phase"] = *c.phase;
  if (c.direction) {
    out["theta"] = c.direction->theta;
    out["phi"] = c.direction->phi;
  }
  return out;
}

json conventions() {
  return {
      {"metric", "diag(+1, -1, -1, -1)"},
      {"gamma_basis",
       "chiral: gamma^0 = [[0, I], [I, 0]], gamma^i = [[0, -sigma^i], [sigma^i, 0]], "
       "gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3 = diag(I, -I)"},
      {"spinor_layout", "psi = (phi_R, phi_L) = (a, b, c, d)"},
      {"sigma", "psibar psi"},
      {"omega", "i psibar gamma^5 psi"},
      {"J", "psibar gamma^mu psi"},
      {"K", "psibar gamma^mu gamma^5 psi"},
      {"S", "i psibar gamma^mu gamma^nu psi, mu < nu"},
      {"charge_conjugation", "C psi = (i Theta phi_L^*, -i Theta phi_R^*), Theta = [[0, -1], [1, 0]]"},
      {"parity", "gamma^0 acting on the spinor re-boosted to the reflected momentum"},
      {"dirac_residual", "|(gamma.p -/+ m) psi| / (m |psi|)"}};
}

Report run_job(const JobSpec& job) {
  Report rep;
  json& body = rep.body;
  body["job"] = job_to_json(job);
  body["conventions"] = conventions();

  switch (job.mode) {
    case Mode::Classify:
    case Mode::Symmetries: {
      const Subject s = build_subject(job);
      body["spinor"] = {{"components", components_json(s.psi.components())},
                        {"provenance", provenance_json(s.psi.provenance())}};
      body["classification"] = classification_json(classify_report(s.psi, job.direction, job.tol));
      if (job.mode == Mode::Symmetries) {
        body["symmetries"] = symmetries_json(
            symmetry_report(s.psi, job.momentum->four_momentum(), job.phases, job.tol, s.partner));
      }
      break;
    }
    case Mode::Sample: {
      SampleMomentum mom;
      if (job.momentum) mom = {job.momentum->mass, job.momentum->pmag};
      const SampleStats stats = run_sample(*job.sample_family, job.seed, *job.count, job.tol,
                                           job.phases, mom, Execution::Parallel);
      body["sample"] = sample_json(job, stats, mom);
      break;
    }
    case Mode::Verify: {
      SuiteOptions opt;
      opt.seed = job.seed;
      opt.tol = job.tol;
      opt.draws = job.count;
      const auto results = run_property_suite(opt);
      body["verify"] = verify_json(results);
      rep.passed = all_passed(results);
      break;
    }
  }
  return rep;
}

std::string emit_report(const Report& report, OutputFormat format) {
  if (format == OutputFormat::Structured) return write_json(report.body);

  const json& b = report.body;
  std::ostringstream os;
  os << "spinorlab report (mode " << b["job"]["mode"].get<std::string>() << ")\n";
  if (b.contains("spinor")) {
    os << "Spinor         " << b["spinor"]["provenance"]["label"].get<std::string>() << "\n";
    const char* names[] = {"a", "b", "c", "d"};
    for (int k = 0; k < 4; ++k) {
      const json& z = b["spinor"]["components"][static_cast<std::size_t>(k)];
      os << "  " << names[k] << " = " << fmt(z[0]) << " + " << fmt(z[1]) << "i\n";
    }
  }
  if (b.contains("classification")) human_classification(os, b["classification"]);
  if (b.contains("symmetries")) human_symmetries(os, b["symmetries"]);
  if (b.contains("sample")) human_sample(os, b["sample"]);
  if (b.contains("verify")) human_verify(os, b["verify"]);
  os << "Conventions    metric " << b["conventions"]["metric"].get<std::string>()
     << ", chiral gamma basis, omega = " << b["conventions"]["omega"].get<std::string>() << "\n";
  return os.str();
}

std::string emit_error(const std::string& kind, const std::string& message) {
  return write_json({{"error", {{"kind", kind}, {"message", message}}}});
}

}  // namespace spinorlab
