#pragma once

#include <iosfwd>
#include <string>

#include "lab/config.hpp"

namespace tfp::lab {

/// Each command writes its files under config.output_dir and a short report
/// to `out`, and returns an ExitCode. Errors propagate as exceptions
/// (ConfigError, tfp::IoError, std::invalid_argument).
int cmd_run(const ExperimentConfig& c, std::ostream& out);
int cmd_sweep(const ExperimentConfig& c, std::ostream& out);
int cmd_trajectory(const ExperimentConfig& c, std::ostream& out);
int cmd_census(const ExperimentConfig& c, std::ostream& out);
int cmd_ramsey(const ExperimentConfig& c, std::ostream& out);
int cmd_stacking(const ExperimentConfig& c, std::ostream& out);
int cmd_verify_oracle(const ExperimentConfig& c, std::ostream& out);

bool is_command(const std::string& name);

/// Runs the named command, mapping exceptions to exit codes and writing
/// diagnostics to `err`.
int dispatch(const ExperimentConfig& c, std::ostream& out, std::ostream& err);

}  // namespace tfp::lab
