#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace tfp::lab {

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kToolVersion = "0.3.0";

enum ExitCode { kOk = 0, kCheckFailed = 1, kConfigError = 2, kIoError = 3 };

/// Invalid configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScheduleConfig {
  std::string kind = "geometric";  // geometric | times | none
  unsigned points = 128;
  std::vector<double> times;
};

struct StatsConfig {
  std::string mode = "auto";  // auto | exact | sampled
  std::uint64_t samples = 4096;
  std::uint32_t exact_max_n = 1024;  // auto switches to sampled above this
};

struct CensusConfig {
  std::vector<std::string> graphs{"C4", "Petersen", "K4,5"};
  std::uint64_t timeout_ms = 10000;
};

struct RamseyConfig {
  std::uint32_t max_n = 300;
  std::uint64_t timeout_ms = 0;
  std::uint64_t node_budget = 0;
};

struct StackingConfig {
  std::vector<std::string> words{"YO"};
  std::uint64_t pairs = 100;
  std::string snapshot;  // edge list file; empty = simulate to time t
  double t = 0.5;
};

struct VerifyConfig {
  std::vector<std::uint32_t> n_values{16, 32, 48, 64};
  std::uint64_t seeds = 100;
  std::optional<std::uint64_t> fault_step;
};

struct ExperimentConfig {
  std::string command;
  std::uint32_t n = 1024;
  std::vector<std::uint32_t> n_sweep;
  std::uint64_t seeds = 1;
  std::uint64_t master_seed = 1;
  double epsilon = 0.1;
  double delta = 0.01;
  std::string sampler = "ranked";
  ScheduleConfig schedule;
  StatsConfig stats;
  std::uint64_t codegree_samples = 256;
  bool write_edges = false;
  std::string output_dir = "tfplab_out";
  unsigned threads = 1;
  CensusConfig census;
  RamseyConfig ramsey;
  StackingConfig stacking;
  VerifyConfig verify;

  /// Sizes to run: n_sweep when given, otherwise {n}.
  std::vector<std::uint32_t> sizes() const;
};

/// Applies `overrides` (dotted.path=value; value parsed as JSON when it
/// parses, else taken as a string) to `doc`, then validates. Unknown keys,
/// wrong types and out-of-range values throw ConfigError.
ExperimentConfig load_config(const std::string& command, nlohmann::json doc,
                             const std::vector<std::string>& overrides);

/// Effective configuration as JSON, keys in a fixed order. `output_dir` and
/// `threads` are omitted because they do not change results.
nlohmann::ordered_json to_json(const ExperimentConfig& c);

/// SHA-256 of the canonical effective configuration and the tool version.
std::string config_hash(const ExperimentConfig& c);

}  // namespace tfp::lab
