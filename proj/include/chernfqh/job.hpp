#pragma once

#include "chernfqh/configuration.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chernfqh {

using Json = nlohmann::ordered_json;

enum class Command { chern, shift, analyze, wick, verify, sweep };

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command command);

enum ExitCode : int {
  kExitSuccess = 0,
  kExitInternal = 1,
  kExitInvalidInput = 2,
  kExitVerificationFailure = 3,
};

/// Rejected job file; maps to kExitInvalidInput.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which field fixed the particle vector.
enum class ParticleSource { given, solve_shift, quasiholes };

/// A configuration read from a job file. Keys: K (row-major integer matrix), g, d (scalar or
/// per-layer), and exactly one of n, solve_shift: true, p. With p and no d, n is minimal
/// (n_i = 2g) and d is derived from p.
struct JobConfiguration {
  Configuration configuration;
  ParticleSource source;
};

IntSymMatrix parse_coupling(const Json& value);
JobConfiguration parse_configuration(const Json& job);

/// Output record {command, input, result, validity, errors} plus the exit code.
struct JobOutcome {
  Json record;
  int exit_code = kExitSuccess;
};

/// Runs one job. Never throws: invalid input and internal failures become error records.
JobOutcome run_job(Command command, const Json& job);

/// Line-oriented rendering of a record; rationals appear exactly as in the structured form.
std::string render_human(const Json& record);

}  // namespace chernfqh
