#include "missmass/cli/config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace missmass::cli {

namespace {

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "input",      "distribution", "metric",      "p",           "header",      "n",
        "r",          "r_grid",       "grid_count",  "delta",       "replicates",  "seed",
        "workers",    "estimators",   "m_values",    "t_values",    "expected_h",  "cap",
        "test_points", "alpha",       "margin",      "diameter",    "gamma",       "classifier",
        "queries",    "save_classifier", "method",   "epsilon",     "use_net",     "output",
        "format",     "hypothesis_strict",
    };
    return keys;
}

template <class T>
void read(const Json& j, const char* key, T& out) {
    if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

template <class T>
void read(const Json& j, const char* key, std::optional<T>& out) {
    if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

template <class T>
Json opt(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

} // namespace

ExperimentConfig config_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("config must be a JSON object", 0);
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!known_keys().count(it.key())) throw ParseError("unknown config key '" + it.key() + "'", 0);
    }
    ExperimentConfig c;
    try {
        read(j, "input", c.input);
        if (j.contains("distribution") && !j.at("distribution").is_null()) {
            c.distribution = distribution_from_json(j.at("distribution"));
        }
        read(j, "metric", c.metric);
        read(j, "p", c.p);
        read(j, "header", c.header);
        read(j, "n", c.n);
        read(j, "r", c.r);
        read(j, "r_grid", c.r_grid);
        read(j, "grid_count", c.grid_count);
        read(j, "delta", c.delta);
        read(j, "replicates", c.replicates);
        read(j, "seed", c.seed);
        read(j, "workers", c.workers);
        read(j, "estimators", c.estimators);
        read(j, "m_values", c.m_values);
        read(j, "t_values", c.t_values);
        read(j, "expected_h", c.expected_h);
        read(j, "cap", c.cap);
        read(j, "test_points", c.test_points);
        read(j, "alpha", c.alpha);
        read(j, "margin", c.margin);
        read(j, "diameter", c.diameter);
        read(j, "gamma", c.gamma);
        read(j, "classifier", c.classifier);
        read(j, "queries", c.queries);
        read(j, "save_classifier", c.save_classifier);
        read(j, "method", c.method);
        read(j, "epsilon", c.epsilon);
        read(j, "use_net", c.use_net);
        read(j, "output", c.output);
        read(j, "format", c.format);
        read(j, "hypothesis_strict", c.hypothesis_strict);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid config value: ") + e.what(), 0);
    }
    return c;
}

Json to_json(const ExperimentConfig& c) {
    Json j;
    j["input"] = opt(c.input);
    j["distribution"] = c.distribution ? missmass::to_json(*c.distribution) : Json(nullptr);
    j["metric"] = c.metric;
    j["p"] = c.p;
    j["header"] = c.header;
    j["n"] = c.n;
    j["r"] = opt(c.r);
    j["r_grid"] = c.r_grid;
    j["grid_count"] = c.grid_count;
    j["delta"] = c.delta;
    j["replicates"] = c.replicates;
    j["seed"] = c.seed;
    j["estimators"] = c.estimators;
    j["m_values"] = c.m_values;
    j["t_values"] = c.t_values;
    j["expected_h"] = opt(c.expected_h);
    j["cap"] = c.cap;
    j["test_points"] = c.test_points;
    j["alpha"] = c.alpha;
    j["margin"] = c.margin;
    j["diameter"] = opt(c.diameter);
    j["gamma"] = opt(c.gamma);
    j["classifier"] = opt(c.classifier);
    j["queries"] = opt(c.queries);
    j["save_classifier"] = opt(c.save_classifier);
    j["method"] = c.method;
    j["epsilon"] = opt(c.epsilon);
    j["use_net"] = c.use_net;
    j["format"] = c.format;
    j["hypothesis_strict"] = c.hypothesis_strict;
    return j;
}

Json read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("config file '" + path + "': " + e.what(), 0);
    }
}

void validate_config(const ExperimentConfig& c) {
    if (c.n < 1) throw ArgumentError("n must be at least 1");
    if (c.replicates < 1) throw ArgumentError("replicates must be at least 1");
    if (c.workers < 1) throw ArgumentError("workers must be at least 1");
    if (!(c.delta > 0.0 && c.delta < 1.0)) throw ArgumentError("delta must lie in (0,1)");
    if (!(c.alpha > 0.0 && c.alpha < 1.0)) throw ArgumentError("alpha must lie in (0,1)");
    if (c.test_points < 1) throw ArgumentError("test_points must be at least 1");
    if (c.cap < 1) throw ArgumentError("cap must be at least 1");
    if (c.r && !(*c.r >= 0.0)) throw ArgumentError("r must be non-negative");
    for (double r : c.r_grid) {
        if (!(r >= 0.0) || !std::isfinite(r)) throw ArgumentError("r_grid entries must be finite and non-negative");
    }
    if (c.format != "json" && c.format != "table") throw ArgumentError("format must be 'json' or 'table'");
    if (c.header != "auto" && c.header != "present" && c.header != "absent") {
        throw ArgumentError("header must be 'auto', 'present' or 'absent'");
    }
    if (c.metric != "auto") metric_kind_from_string(c.metric);
    for (const auto* path : {&c.input, &c.classifier, &c.queries}) {
        if (*path && !std::filesystem::is_regular_file(**path)) throw IoError("cannot open input file '" + **path + "'");
    }
}

SpaceRequest space_request(const ExperimentConfig& c) {
    SpaceRequest request;
    if (c.metric != "auto") request.kind = metric_kind_from_string(c.metric);
    request.p = c.p;
    return request;
}

HeaderMode header_mode(const ExperimentConfig& c) {
    if (c.header == "present") return HeaderMode::present;
    if (c.header == "absent") return HeaderMode::absent;
    return HeaderMode::automatic;
}

} // namespace missmass::cli
