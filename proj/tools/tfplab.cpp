#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lab/commands.hpp"
#include "lab/config.hpp"
#include "tfp/errors.hpp"
#include "tfp/io.hpp"

namespace {

// Turns leftover "--a.b=value" / "--a.b value" arguments into overrides.
std::vector<std::string> dotted_overrides(const std::vector<std::string>& extras) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < extras.size(); ++k) {
    const std::string& arg = extras[k];
    if (arg.rfind("--", 0) != 0 || arg.size() == 2)
      throw tfp::lab::ConfigError("unexpected argument '" + arg + "'");
    std::string item = arg.substr(2);
    if (item.find('=') == std::string::npos) {
      if (k + 1 >= extras.size()) throw tfp::lab::ConfigError("flag '" + arg + "' needs a value");
      item += "=" + extras[++k];
    }
    out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace tfp::lab;
  CLI::App app{"Triangle-free process laboratory"};
  app.set_version_flag("--version", kToolVersion);
  app.allow_extras();
  std::string command;
  std::string config_path;
  std::vector<std::string> sets;
  std::string output;
  bool print_config = false;
  app.add_option("command", command, "run | sweep | census | ramsey | trajectory | stacking | verify-oracle")
      ->required();
  app.add_option("-c,--config", config_path, "JSON configuration file");
  app.add_option("-s,--set", sets, "Override a config key: dotted.key=value (repeatable)");
  app.add_option("-o,--output", output, "Output directory (same as output_dir)");
  app.add_flag("--print-config", print_config, "Print the effective configuration and exit");
  app.footer(
      "Any config key can also be given as a flag with its dotted path, e.g. --n=4096 or --schedule.kind=times.\n"
      "TFP_THREADS overrides the configured thread count.\n"
      "Exit codes: 0 ok, 1 check failed, 2 config error, 3 I/O error.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    if (!is_command(command)) throw ConfigError("unknown command '" + command + "'");
    nlohmann::json doc = nlohmann::json::object();
    if (!config_path.empty()) {
      doc = nlohmann::json::parse(tfp::read_file(config_path), nullptr, false);
      if (doc.is_discarded()) throw ConfigError(config_path + " is not valid JSON");
    }
    std::vector<std::string> overrides;
    if (const char* env = std::getenv("TFP_THREADS"); env && *env) overrides.push_back(std::string("threads=") + env);
    for (const auto& s : sets) overrides.push_back(s);
    for (const auto& s : dotted_overrides(app.remaining())) overrides.push_back(s);
    if (!output.empty()) overrides.push_back("output_dir=\"" + output + "\"");
    const ExperimentConfig cfg = load_config(command, doc, overrides);
    if (print_config) {
      std::cout << to_json(cfg).dump(2) << "\nconfig_hash " << config_hash(cfg) << '\n';
      return kOk;
    }
    return dispatch(cfg, std::cout, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const tfp::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIoError;
  }
}
