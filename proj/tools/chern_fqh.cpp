// chern-fqh: exact Chern characters of multilayer FQH bundles from a JSON job file.

#include "chernfqh/job.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using chernfqh::Json;

namespace {

int emit(const Json& record, const std::string& format, const std::string& out_path) {
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "chern-fqh: cannot write " << out_path << '\n';
      return chernfqh::kExitInternal;
    }
    out << record.dump(2) << '\n';
  }
  if (format == "human") std::cout << chernfqh::render_human(record);
  else std::cout << record.dump(2) << '\n';
  return chernfqh::kExitSuccess;
}

Json input_error(const std::string& command, const std::string& message) {
  return Json{{"command", command},
              {"input", nullptr},
              {"result", Json::object()},
              {"validity", Json::object()},
              {"errors", Json::array({Json{{"code", "invalid_input"}, {"message", message}}})}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Chern character, rank and conductance of multilayer fractional quantum Hall bundles"};
  std::string command;
  std::string config_path;
  std::string out_path;
  std::string format = "human";
  app.add_option("command", command, "chern | shift | analyze | wick | verify | sweep")
      ->required()
      ->check(CLI::IsMember({"chern", "shift", "analyze", "wick", "verify", "sweep"}));
  app.add_option("--config", config_path, "JSON job file")->required();
  app.add_option("--out", out_path, "also write the structured record to this file");
  app.add_option("--format", format, "human | json-like")->check(CLI::IsMember({"human", "json-like", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return chernfqh::kExitInvalidInput;
  }

  const auto parsed = chernfqh::parse_command(command);
  std::ifstream in(config_path);
  if (!in) {
    emit(input_error(command, "cannot read " + config_path), format, out_path);
    return chernfqh::kExitInvalidInput;
  }
  Json job;
  try {
    job = Json::parse(in);
  } catch (const Json::parse_error& e) {
    emit(input_error(command, std::string("malformed job file: ") + e.what()), format, out_path);
    return chernfqh::kExitInvalidInput;
  }

  try {
    const chernfqh::JobOutcome outcome = chernfqh::run_job(*parsed, job);
    const int written = emit(outcome.record, format, out_path);
    return written != chernfqh::kExitSuccess ? written : outcome.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "chern-fqh: " << e.what() << '\n';
    return chernfqh::kExitInternal;
  }
}
