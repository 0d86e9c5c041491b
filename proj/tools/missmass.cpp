#include "missmass/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using missmass::Json;
using namespace missmass::cli;

struct Invocation {
    std::string command;
    std::optional<std::string> config_file;
    Json overrides = Json::object();
};

template <class T>
CLI::Option* value_option(CLI::App* app, Invocation& inv, const std::string& flag, const std::string& key,
                          const std::string& help) {
    return app->add_option_function<T>(flag, [&inv, key](const T& v) { inv.overrides[key] = v; }, help);
}

void json_option(CLI::App* app, Invocation& inv, const std::string& flag, const std::string& key,
                 const std::string& help) {
    app->add_option_function<std::string>(
        flag,
        [&inv, key](const std::string& text) {
            try {
                inv.overrides[key] = Json::parse(text);
            } catch (const nlohmann::json::parse_error& e) {
                throw CLI::ValidationError(key, std::string("not valid JSON: ") + e.what());
            }
        },
        help);
}

void add_settings(CLI::App* app, Invocation& inv) {
    app->add_option("-c,--config", inv.config_file, "JSON config file; flags override its entries");
    value_option<std::string>(app, inv, "-i,--input", "input", "sample file (CSV, or .json)");
    json_option(app, inv, "--distribution", "distribution", "distribution spec as JSON, e.g. '{\"kind\":\"zipf\",\"k\":50}'");
    value_option<std::string>(app, inv, "--metric", "metric", "auto|euclidean|lp|discrete|scaled_indicator");
    value_option<double>(app, inv, "--p", "p", "exponent for lp and scaled_indicator metrics");
    value_option<std::string>(app, inv, "--header", "header", "auto|present|absent");
    value_option<std::size_t>(app, inv, "-n,--n", "n", "sample size for generated samples");
    value_option<double>(app, inv, "-r,--r", "r", "radius");
    value_option<std::vector<double>>(app, inv, "--r-grid", "r_grid", "comma-separated radius grid")->delimiter(',');
    value_option<std::size_t>(app, inv, "--grid-count", "grid_count", "points in the default radius grid");
    value_option<double>(app, inv, "-d,--delta", "delta", "failure probability");
    value_option<std::size_t>(app, inv, "--replicates", "replicates", "Monte Carlo replicates");
    value_option<std::uint64_t>(app, inv, "-s,--seed", "seed", "root seed");
    value_option<std::size_t>(app, inv, "-w,--workers", "workers", "worker threads");
    value_option<std::vector<std::string>>(app, inv, "--estimators", "estimators",
                                           "good_turing,martingale,oracle,smoothed,h")
        ->delimiter(',');
    value_option<std::vector<std::size_t>>(app, inv, "--m", "m_values", "martingale sub-sample sizes")->delimiter(',');
    value_option<std::vector<double>>(app, inv, "--t", "t_values", "deviation parameters t")->delimiter(',');
    value_option<double>(app, inv, "--expected-h", "expected_h", "E[h] used by the variance and tail bounds");
    value_option<std::size_t>(app, inv, "--cap", "cap", "search cap for h");
    value_option<std::size_t>(app, inv, "--test-points", "test_points", "Monte Carlo test points per oracle call");
    value_option<double>(app, inv, "--alpha", "alpha", "oracle confidence parameter");
    value_option<double>(app, inv, "--margin", "margin", "multiplier on the sample diameter for normalisation");
    value_option<double>(app, inv, "--diameter", "diameter", "declared diameter of the space");
    value_option<double>(app, inv, "--gamma", "gamma", "proximity classifier threshold");
    value_option<std::string>(app, inv, "--classifier", "classifier", "saved classifier JSON");
    value_option<std::string>(app, inv, "--queries", "queries", "query points to classify (CSV)");
    value_option<std::string>(app, inv, "--save-classifier", "save_classifier", "write the classifier to this JSON file");
    value_option<std::string>(app, inv, "--method", "method", "good_turing|martingale_min");
    value_option<double>(app, inv, "--epsilon", "epsilon", "coding distortion level");
    value_option<bool>(app, inv, "--use-net", "use_net", "code with an epsilon/2-net (true/false)");
    value_option<std::string>(app, inv, "-o,--output", "output", "output prefix: writes PREFIX.json and PREFIX.csv");
    value_option<std::string>(app, inv, "--format", "format", "json|table for standard output");
    app->add_flag_function(
        "--hypothesis-strict", [&inv](std::int64_t) { inv.overrides["hypothesis_strict"] = true; },
        "treat unmet hypotheses as errors");
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw missmass::IoError("cannot write output file '" + path + "'");
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Missing-mass estimation, concentration bounds and validation in metric spaces"};
    app.require_subcommand(1);
    Invocation inv;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"estimate", "estimators, local separation and bounds for a sample file"},
        {"simulate", "Monte Carlo campaign from a distribution spec"},
        {"bounds", "evaluate the closed-form variance and tail bounds"},
        {"wasserstein", "two-sided W1 bounds over a radius grid"},
        {"classify", "proximity classifier with a false-alarm certificate"},
        {"code", "nearest-neighbour coding report"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_settings(sub, inv);
        sub->callback([&inv, name = name] { inv.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Json merged = inv.config_file ? read_config_file(*inv.config_file) : Json::object();
        if (!merged.is_object()) throw missmass::ParseError("config must be a JSON object", 0);
        for (auto it = inv.overrides.begin(); it != inv.overrides.end(); ++it) merged[it.key()] = it.value();
        const ExperimentConfig config = config_from_json(merged);
        const CommandResult result = run_command(inv.command, config);

        const std::string report = missmass::dump_json(result.report) + "\n";
        if (config.output) {
            write_file(*config.output + ".json", report);
            if (result.csv) write_file(*config.output + ".csv", *result.csv);
        } else if (config.format == "table") {
            std::cout << render_table(result.report);
        } else {
            std::cout << report;
        }
        for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
        return result.warnings.empty() ? 0 : 1;
    } catch (const HypothesisError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
