#pragma once

#include "missmass/cli/config.hpp"

#include <optional>
#include <string>
#include <vector>

namespace missmass::cli {

/// What a command produced. Nothing is written to disk here; the caller
/// decides where the report and table go.
struct CommandResult {
    Json report;
    /// Table with one "# config: ..." comment line and a header row.
    std::optional<std::string> csv;
    /// Unmet hypotheses; non-empty means exit code 1.
    std::vector<std::string> warnings;
};

CommandResult cmd_estimate(const ExperimentConfig& config);
CommandResult cmd_simulate(const ExperimentConfig& config);
CommandResult cmd_bounds(const ExperimentConfig& config);
CommandResult cmd_wasserstein(const ExperimentConfig& config);
CommandResult cmd_classify(const ExperimentConfig& config);
CommandResult cmd_code(const ExperimentConfig& config);

/// Dispatches by subcommand name; throws ArgumentError for an unknown name.
CommandResult run_command(const std::string& name, const ExperimentConfig& config);

/// Flattens the scalar entries of a report into aligned "key  value" lines.
std::string render_table(const Json& report);

} // namespace missmass::cli
