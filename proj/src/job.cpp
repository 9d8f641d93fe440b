#include "chernfqh/job.hpp"

#include "chernfqh/analysis.hpp"
#include "chernfqh/chern.hpp"
#include "chernfqh/wick.hpp"

#include <array>
#include <sstream>
#include <utility>

namespace chernfqh {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 6> kCommands{{
    {Command::chern, "chern"},
    {Command::shift, "shift"},
    {Command::analyze, "analyze"},
    {Command::wick, "wick"},
    {Command::verify, "verify"},
    {Command::sweep, "sweep"},
}};

// Largest layer count the wick command expands by brute force.
constexpr int kWickLayerLimit = 8;

Integer parse_integer(const Json& value, const std::string& what) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Integer(value.get<unsigned long long>());
    return Integer(value.get<long long>());
  }
  if (value.is_string()) {
    const auto text = value.get<std::string>();
    try {
      const Rational q = parse_rational(text);
      if (is_integral(q)) return numerator(q);
    } catch (const std::invalid_argument&) {
    }
    throw InputError(what + " must be an integer, got \"" + text + "\"");
  }
  throw InputError(what + " must be an integer");
}

int parse_small(const Json& value, const std::string& what, int lo, int hi) {
  const Integer z = parse_integer(value, what);
  if (z < lo || z > hi)
    throw InputError(what + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return z.convert_to<int>();
}

const Json& require(const Json& job, const char* key) {
  if (!job.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  return job.at(key);
}

// Scalar or per-layer integer vector.
IntVector parse_layer_vector(const Json& value, int k, const std::string& what) {
  if (!value.is_array()) return broadcast(parse_integer(value, what), k);
  if (static_cast<int>(value.size()) != k)
    throw InputError(what + " must have " + std::to_string(k) + " entries");
  IntVector out(k);
  for (int i = 0; i < k; ++i) out(i) = parse_integer(value[static_cast<std::size_t>(i)], what);
  return out;
}

int parse_genus(const Json& job) { return parse_small(require(job, "g"), "g", 0, 1000); }

Json to_json(const Rational& q) { return to_string(q); }
Json to_json(const Integer& z) { return to_string(z); }

template <typename Derived>
Json to_json_vector(const Eigen::MatrixBase<Derived>& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const IntSymMatrix& m) {
  Json out = Json::array();
  for (int i = 0; i < m.size(); ++i) out.push_back(to_json_vector(m.matrix().row(i)));
  return out;
}

Json to_json(const ChernCharacter& ch) {
  Json out = Json::array();
  for (const auto& c : ch.coeffs) out.push_back(to_json(c));
  return out;
}

Json to_json(const ValidityReport& v) {
  return Json{{"kminusI_psd", v.kminusI_psd},   {"p_nonnegative", v.p_nonnegative},
              {"kodaira_bound", v.kodaira_bound}, {"n_constraint", v.n_constraint},
              {"det_nonzero", v.det_nonzero},     {"certified", v.certified()}};
}

Json describe(const Configuration& cfg) {
  return Json{{"K", to_json(cfg.coupling())},
              {"g", cfg.genus()},
              {"d", to_json_vector(cfg.degrees())},
              {"n", to_json_vector(cfg.particles())},
              {"p", to_json_vector(cfg.quasiholes())}};
}

Json error_entry(std::string_view code, const std::string& message) {
  return Json{{"code", code}, {"message", message}};
}

struct Outcome {
  Json result = Json::object();
  Json validity = Json::object();
  int exit_code = kExitSuccess;
  Json errors = Json::array();
};

Outcome run_chern(const Json& job) {
  const JobConfiguration parsed = parse_configuration(job);
  const Configuration& cfg = parsed.configuration;
  Outcome out;
  out.validity = to_json(validity(cfg));
  if (det(cfg.coupling()) == 0) throw InputError("K is singular");

  const ChernCharacter ch = ch_theorem3(cfg);
  out.result = describe(cfg);
  out.result["rank"] = to_json(ch.rank());
  if (ch.rank() == 0) {
    out.result["conductance"] = nullptr;
  } else {
    out.result["conductance"] = to_json(cfg.genus() == 0 ? Rational(0) : Rational(-ch.coeffs[1] / ch.rank()));
  }
  out.result["ch"] = to_json(ch);
  Json notes = Json::array();
  if (rank_vanishing(cfg)) notes.push_back("negative quasi-hole count: the rank vanishes");
  if (!validity(cfg).certified()) notes.push_back("hypotheses not met: ch is an Euler characteristic, not certified");
  out.result["notes"] = notes;

  if (job.value("check_bruteforce", false)) {
    const ChernCharacter brute = ch_bruteforce(cfg);
    const bool agrees = brute == ch;
    out.result["bruteforce"] = to_json(brute);
    out.result["bruteforce_agrees"] = agrees;
    if (!agrees) {
      out.exit_code = kExitVerificationFailure;
      out.errors.push_back(error_entry("verification_failure", "brute force and closed form differ"));
    }
  }
  return out;
}

Outcome run_shift(const Json& job) {
  const IntSymMatrix K = parse_coupling(require(job, "K"));
  const int g = parse_genus(job);
  const IntVector d = parse_layer_vector(require(job, "d"), K.size(), "d");
  if (det(K) == 0) throw InputError("K is singular");
  const ShiftSolution s = solve_shift(K, g, d);
  Outcome out;
  out.result = Json{{"n0", to_json_vector(s.particles)}, {"integral", s.integral}, {"admissible", s.admissible}};
  if (s.integral) {
    IntVector n(K.size());
    for (int i = 0; i < K.size(); ++i) n(i) = numerator(s.particles(i));
    const Configuration cfg(K, g, d, n);
    out.result["p"] = to_json_vector(cfg.quasiholes());
    out.validity = to_json(validity(cfg));
  }
  return out;
}

bool has_particle_key(const Json& job) {
  return job.contains("n") || job.contains("p") || job.contains("solve_shift");
}

Outcome run_analyze(const Json& job) {
  const IntSymMatrix K = parse_coupling(require(job, "K"));
  const Integer d = det(K);
  if (d == 0) throw InputError("K is singular");
  const ParticleMaxReport pm = particle_max_analysis(K);
  Outcome out;
  out.result = Json{{"det", to_json(d)},
                    {"inverse_entry_sum", to_json(entry_sum(inverse(K)))},
                    {"column_sums", to_json_vector(pm.column_sums)},
                    {"maximization_guaranteed", pm.all_nonnegative},
                    {"kminusI_psd", is_psd(minus_identity(K))}};
  if (!job.contains("g") || !has_particle_key(job)) return out;

  const Configuration cfg = parse_configuration(job).configuration;
  const IntVector p = cfg.quasiholes();
  const ParticleShift shift = delta_n(K, p);
  out.result["configuration"] = describe(cfg);
  out.result["rank_vanishing"] = rank_vanishing(cfg);
  out.result["delta_n"] = to_json_vector(shift.per_layer);
  out.result["delta_total"] = to_json(shift.total);
  bool positive_n = true;
  for (int i = 0; i < cfg.layers(); ++i)
    if (!(cfg.particles()(i) > 0)) positive_n = false;
  if (positive_n) out.result["asymptotic_conductance"] = to_json(asymptotic_conductance(K, cfg.particles(), p));
  bool positive_c = true;
  for (int i = 0; i < K.size(); ++i)
    if (!(pm.column_sums(i) > 0)) positive_c = false;
  if (positive_c) {
    const FillingReport filling = asymptotic_filling(K, cfg.genus(), cfg.degrees());
    out.result["filling_leading"] = to_json_vector(filling.leading);
    out.result["filling_maximizer"] = to_json_vector(filling.maximizer);
  }
  out.validity = to_json(validity(cfg));
  return out;
}

ExponentSign parse_sign(const Json& job) {
  return job.value("corrupt_sign", false) ? ExponentSign::positive : ExponentSign::negative;
}

Outcome run_wick(const Json& job) {
  const IntSymMatrix K = parse_coupling(require(job, "K"));
  const int k = K.size();
  if (k > kWickLayerLimit)
    throw InputError("wick expands at most " + std::to_string(kWickLayerLimit) + " layers by brute force");
  LayerSet inserted = 0;
  if (job.contains("I")) {
    const Json& list = job.at("I");
    if (!list.is_array()) throw InputError("I must be a list of 1-based layer indices");
    for (const auto& entry : list) inserted |= LayerSet{1} << (parse_small(entry, "I entry", 1, k) - 1);
  }
  const GeneratorLayout layout(k, 1);
  const auto brute = wick_bruteforce<Rational>(K, inserted, layout, 0);
  const auto closed = wick_closed<Rational>(K, inserted, layout, 0, parse_sign(job));
  const WickFactors f = wick_factors(K, inserted);
  Outcome out;
  out.result = Json{{"bruteforce", format(brute, layout)},
                    {"closed_form", format(closed, layout)},
                    {"det", to_json(f.det)},
                    {"adjugate_sum", to_json(f.adjugate_sum)},
                    {"equal", brute == closed}};
  if (!(brute == closed)) {
    out.exit_code = kExitVerificationFailure;
    out.errors.push_back(error_entry("verification_failure", "Gaussian integral differs from the closed form"));
  }
  return out;
}

std::vector<int> parse_int_list(const Json& job, const char* key, std::vector<int> fallback, int lo, int hi) {
  if (!job.contains(key)) return fallback;
  const Json& list = job.at(key);
  if (!list.is_array() || list.empty()) throw InputError(std::string(key) + " must be a non-empty list");
  std::vector<int> out;
  for (const auto& v : list) out.push_back(parse_small(v, key, lo, hi));
  return out;
}

Outcome run_verify(const Json& job) {
  std::vector<Configuration> configurations;
  if (job.contains("K")) {
    configurations.push_back(parse_configuration(job).configuration);
  } else {
    OracleSweepRange range;
    range.layers = parse_int_list(job, "layers", range.layers, 1, kMaxLayers);
    range.genera = parse_int_list(job, "genera", range.genera, 0, 100);
    if (job.contains("entry_max")) range.entry_max = parse_small(job.at("entry_max"), "entry_max", 0, 100);
    if (job.contains("p_values")) {
      range.quasihole_values.clear();
      for (int v : parse_int_list(job, "p_values", {}, -1000, 1000)) range.quasihole_values.push_back(v);
    }
    configurations = oracle_sweep(range);
  }
  for (const auto& cfg : configurations) {
    const int generators = 2 * cfg.genus() * cfg.layers() + 2 * cfg.genus();
    if (generators > kBruteForceGeneratorLimit)
      throw InputError("refusing to run: configuration needs " + std::to_string(generators) +
                       " Grassmann generators, the brute-force limit is " +
                       std::to_string(kBruteForceGeneratorLimit));
    for (int i = 0; i < cfg.layers(); ++i)
      if (cfg.particles()(i) < cfg.genus()) throw InputError("brute force needs n_i >= g");
    if (det(cfg.coupling()) == 0) throw InputError("K is singular");
  }

  const ExponentSign sign = parse_sign(job);
  Outcome out;
  Json checks = Json::array();
  long long passed = 0;
  for (const auto& cfg : configurations) {
    const EquivalenceReport report = verify_equivalence(cfg, sign);
    Json entry = describe(cfg);
    entry["bruteforce"] = to_json(report.bruteforce);
    entry["closed_form"] = to_json(report.closed_form);
    entry["status"] = report.equal ? "pass" : "fail";
    checks.push_back(std::move(entry));
    if (report.equal) ++passed;
  }
  const long long failed = static_cast<long long>(configurations.size()) - passed;
  out.result = Json{{"configurations", configurations.size()},
                    {"passed", passed},
                    {"failed", failed},
                    {"sign", sign == ExponentSign::negative ? "negative" : "positive"},
                    {"checks", checks}};
  if (failed > 0) {
    out.exit_code = kExitVerificationFailure;
    out.errors.push_back(error_entry("verification_failure",
                                     std::to_string(failed) + " configuration(s) differ between the pipelines"));
  }
  return out;
}

Outcome run_sweep(const Json& job) {
  const IntSymMatrix K = parse_coupling(require(job, "K"));
  const int k = K.size();
  const int g = parse_genus(job);
  const IntVector p = parse_layer_vector(require(job, "p"), k, "p");
  const Integer from = parse_integer(require(job, "d_from"), "d_from");
  const Integer to = parse_integer(require(job, "d_to"), "d_to");
  const Integer step = job.contains("d_step") ? parse_integer(job.at("d_step"), "d_step") : Integer(1);
  if (step <= 0) throw InputError("d_step must be positive");
  if (to < from) throw InputError("d_to must not be below d_from");
  if ((to - from) / step > 100000) throw InputError("sweep covers more than 100000 degree values");
  if (det(K) == 0) throw InputError("K is singular");
  const RatMatrix inv = inverse(K);

  Outcome out;
  Json rows = Json::array();
  long long skipped = 0;
  bool monotone = true;
  std::optional<Rational> previous;
  for (Integer d = from; d <= to; d += step) {
    const IntVector degrees = broadcast(d, k);
    const IntVector rhs = degrees - Integer(g - 1) * K.diagonal() - p;
    IntVector n(k);
    bool usable = true;
    for (int i = 0; i < k; ++i) {
      Rational ni = 0;
      for (int j = 0; j < k; ++j) ni += inv(i, j) * Rational(rhs(j));
      if (!is_integral(ni) || !(numerator(ni) > 2 * g - 1)) {
        usable = false;
        break;
      }
      n(i) = numerator(ni);
    }
    if (!usable) {
      ++skipped;
      continue;
    }
    const Configuration cfg(K, g, degrees, n);
    const ChernCharacter ch = ch_theorem3(cfg);
    if (ch.rank() == 0) {
      ++skipped;
      continue;
    }
    const Rational exact = g == 0 ? Rational(0) : Rational(-ch.coeffs[1] / ch.rank());
    const Rational asymptotic = asymptotic_conductance(K, n, p);
    Rational difference = exact - asymptotic;
    if (difference < 0) difference = -difference;
    if (previous && difference > *previous) monotone = false;
    previous = difference;
    rows.push_back(Json{{"d", to_json(d)},
                        {"n", to_json_vector(n)},
                        {"exact", to_json(exact)},
                        {"asymptotic", to_json(asymptotic)},
                        {"difference", to_json(difference)},
                        {"scaled_difference", to_json(Rational(difference * Rational(d)))}});
  }
  out.result = Json{{"rows", rows}, {"skipped", skipped}, {"difference_nonincreasing", monotone}};
  return out;
}

void render(const Json& value, const std::string& path, std::ostringstream& os);

std::string inline_value(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (!value.is_array()) return value.dump();
  std::string out = "[";
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (i) out += ", ";
    out += inline_value(value[i]);
  }
  return out + "]";
}

bool is_flat(const Json& value) {
  if (value.is_object()) return false;
  if (value.is_array())
    for (const auto& v : value)
      if (!is_flat(v)) return false;
  return true;
}

void render(const Json& value, const std::string& path, std::ostringstream& os) {
  if (is_flat(value)) {
    os << path << ": " << inline_value(value) << '\n';
    return;
  }
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) render(child, path.empty() ? key : path + "." + key, os);
    return;
  }
  for (std::size_t i = 0; i < value.size(); ++i) render(value[i], path + "[" + std::to_string(i) + "]", os);
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [command, text] : kCommands)
    if (text == name) return command;
  return std::nullopt;
}

std::string_view command_name(Command command) {
  for (const auto& [c, text] : kCommands)
    if (c == command) return text;
  return "unknown";
}

IntSymMatrix parse_coupling(const Json& value) {
  if (!value.is_array() || value.empty()) throw InputError("K must be a non-empty list of rows");
  const int k = static_cast<int>(value.size());
  if (k > kMaxLayers) throw InputError("K has more than " + std::to_string(kMaxLayers) + " layers");
  IntMatrix m(k, k);
  for (int i = 0; i < k; ++i) {
    const Json& row = value[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != k) throw InputError("K must be square");
    for (int j = 0; j < k; ++j) m(i, j) = parse_integer(row[static_cast<std::size_t>(j)], "K entry");
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (m(i, j) != m(j, i)) throw InputError("K must be symmetric");
      if (m(i, j) < 0) throw InputError("K must have non-negative entries");
    }
  return IntSymMatrix(m);
}

JobConfiguration parse_configuration(const Json& job) {
  if (!job.is_object()) throw InputError("job file must hold a single object");
  IntSymMatrix K = parse_coupling(require(job, "K"));
  const int k = K.size();
  const int g = parse_genus(job);

  const bool has_n = job.contains("n");
  const bool has_p = job.contains("p");
  const bool has_solve = job.contains("solve_shift") && job.at("solve_shift") != false;
  if (int(has_n) + int(has_p) + int(has_solve) != 1)
    throw InputError("exactly one of n, solve_shift, p must fix the particle vector");

  std::optional<IntVector> degrees;
  if (job.contains("d")) {
    degrees = parse_layer_vector(job.at("d"), k, "d");
    for (int i = 0; i < k; ++i)
      if ((*degrees)(i) < 0) throw InputError("d must be non-negative");
  }

  if (has_n) {
    if (!degrees) throw InputError("n requires d");
    const Json& value = job.at("n");
    if (!value.is_array()) throw InputError("n must be a list");
    const IntVector n = parse_layer_vector(value, k, "n");
    return {Configuration(std::move(K), g, *degrees, n), ParticleSource::given};
  }

  if (has_solve) {
    if (!degrees) throw InputError("solve_shift requires d");
    if (det(K) == 0) throw InputError("K is singular");
    const ShiftSolution s = solve_shift(K, g, *degrees);
    if (!s.integral) throw InputError("the shift solution is not integral");
    IntVector n(k);
    for (int i = 0; i < k; ++i) n(i) = numerator(s.particles(i));
    return {Configuration(std::move(K), g, *degrees, n), ParticleSource::solve_shift};
  }

  const IntVector p = parse_layer_vector(job.at("p"), k, "p");
  if (!degrees) return {Configuration::from_quasiholes(std::move(K), g, minimal_particles(k, g), p),
                        ParticleSource::quasiholes};
  if (det(K) == 0) throw InputError("K is singular");
  const RatVector n_rat = inverse(K) * cast_matrix<Rational>(*degrees - Integer(g - 1) * K.diagonal() - p);
  IntVector n(k);
  for (int i = 0; i < k; ++i) {
    if (!is_integral(n_rat(i))) throw InputError("d and p do not determine an integral particle vector");
    n(i) = numerator(n_rat(i));
  }
  return {Configuration(std::move(K), g, *degrees, n), ParticleSource::quasiholes};
}

JobOutcome run_job(Command command, const Json& job) {
  JobOutcome outcome;
  Json& record = outcome.record;
  record["command"] = command_name(command);
  record["input"] = job;
  record["result"] = Json::object();
  record["validity"] = Json::object();
  record["errors"] = Json::array();
  try {
    if (!job.is_object()) throw InputError("job file must hold a single object");
    Outcome out;
    switch (command) {
      case Command::chern: out = run_chern(job); break;
      case Command::shift: out = run_shift(job); break;
      case Command::analyze: out = run_analyze(job); break;
      case Command::wick: out = run_wick(job); break;
      case Command::verify: out = run_verify(job); break;
      case Command::sweep: out = run_sweep(job); break;
    }
    record["result"] = std::move(out.result);
    record["validity"] = std::move(out.validity);
    record["errors"] = std::move(out.errors);
    outcome.exit_code = out.exit_code;
  } catch (const InputError& e) {
    record["errors"].push_back(error_entry("invalid_input", e.what()));
    outcome.exit_code = kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    record["errors"].push_back(error_entry("invalid_input", e.what()));
    outcome.exit_code = kExitInvalidInput;
  } catch (const std::domain_error& e) {
    record["errors"].push_back(error_entry("invalid_input", e.what()));
    outcome.exit_code = kExitInvalidInput;
  } catch (const std::exception& e) {
    record["errors"].push_back(error_entry("internal", e.what()));
    outcome.exit_code = kExitInternal;
  }
  return outcome;
}

std::string render_human(const Json& record) {
  std::ostringstream os;
  render(record, "", os);
  return os.str();
}

}  // namespace chernfqh
