#pragma once

#include "missmass/distributions.hpp"
#include "missmass/errors.hpp"
#include "missmass/io.hpp"
#include "missmass/serialize.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace missmass::cli {

/// A hypothesis of a bound is not met and strict mode is on.
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// Fully resolved settings of one run. Every field has a JSON key of the same
/// name; a config file supplies defaults and command-line flags override them.
struct ExperimentConfig {
    std::optional<std::string> input;
    std::optional<DistributionSpec> distribution;
    std::string metric = "auto";
    double p = 2.0;
    std::string header = "auto";

    std::size_t n = 100;
    std::optional<double> r;
    std::vector<double> r_grid;
    std::size_t grid_count = 20;
    double delta = 0.1;
    std::size_t replicates = 100;
    std::uint64_t seed = 1;
    std::size_t workers = 1;
    std::vector<std::string> estimators;
    std::vector<std::size_t> m_values;
    std::vector<double> t_values;
    std::optional<double> expected_h;
    std::size_t cap = 8;

    std::size_t test_points = 100000;
    double alpha = 0.01;
    double margin = 1.05;
    std::optional<double> diameter;

    std::optional<double> gamma;
    std::optional<std::string> classifier;
    std::optional<std::string> queries;
    std::optional<std::string> save_classifier;
    std::string method = "martingale_min";

    std::optional<double> epsilon;
    bool use_net = true;

    std::optional<std::string> output;
    std::string format = "json";
    bool hypothesis_strict = false;
};

/// Builds a config from a JSON object; unknown keys are rejected.
ExperimentConfig config_from_json(const Json& j);
Json to_json(const ExperimentConfig& config);

/// Reads a JSON config file (IoError / ParseError on failure).
Json read_config_file(const std::string& path);

/// Applies the checks shared by all commands (n >= 1, replicates >= 1, ...).
void validate_config(const ExperimentConfig& config);

SpaceRequest space_request(const ExperimentConfig& config);
HeaderMode header_mode(const ExperimentConfig& config);

} // namespace missmass::cli
