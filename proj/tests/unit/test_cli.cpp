#include "missmass/cli/commands.hpp"
#include "missmass/cli/config.hpp"
#include "missmass/errors.hpp"
#include "missmass/serialize.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace missmass;
using namespace missmass::cli;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
    const auto dir = std::filesystem::temp_directory_path() / "missmass_unit";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path) << text;
    return path.string();
}

ExperimentConfig simulate_config() {
    ExperimentConfig c;
    c.distribution = discrete_uniform(20);
    c.n = 40;
    c.r = 0.5;
    c.replicates = 30;
    c.seed = 7;
    c.test_points = 2000;
    return c;
}

} // namespace

TEST_CASE("config json round trip") {
    auto c = simulate_config();
    c.r_grid = {0.1, 0.2};
    c.m_values = {5, 10};
    c.estimators = {"good_turing", "oracle"};
    c.hypothesis_strict = true;
    const auto back = config_from_json(to_json(c));
    CHECK(dump_json(to_json(back)) == dump_json(to_json(c)));
    CHECK(back.r_grid == c.r_grid);
    CHECK(back.hypothesis_strict);
}

TEST_CASE("unknown config keys are rejected") {
    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"n": 5, "radius": 1})")), ParseError);
    CHECK_THROWS(config_from_json(Json::parse(R"({"n": "five"})")));
}

TEST_CASE("config validation") {
    ExperimentConfig c;
    c.n = 0;
    CHECK_THROWS_AS(validate_config(c), ArgumentError);
    c = ExperimentConfig{};
    c.replicates = 0;
    CHECK_THROWS_AS(validate_config(c), ArgumentError);
    c = ExperimentConfig{};
    c.input = "/no/such/file.csv";
    CHECK_THROWS_AS(validate_config(c), IoError);
    c = ExperimentConfig{};
    c.r_grid = {0.1, -0.2};
    CHECK_THROWS_AS(validate_config(c), ArgumentError);
}

TEST_CASE("distribution specs survive json") {
    const std::vector<DistributionSpec> specs{zipf(4), UniformInterval{-1, 2}, RealAtoms{{0.0, 1.0}, {0.5, 0.5}},
                                              SphereAtom{30, 5, 1.2}, BasisUniform{8}, ScaledIndicatorDist{2.0, 0.5},
                                              LowdimEmbedding{2, 4}, GaussianMixture{{{0, 1}, {2, 3}}, {0.25, 0.75}, 0.3}};
    for (const auto& spec : specs) {
        const auto back = distribution_from_json(to_json(spec));
        CHECK(dump_json(to_json(back)) == dump_json(to_json(spec)));
    }
    const auto shorthand = distribution_from_json(Json::parse(R"({"kind": "zipf", "k": 3})"));
    CHECK(std::get<DiscreteDist>(shorthand).symbols.size() == 3);
    CHECK_THROWS(distribution_from_json(Json::parse(R"({"kind": "nonsense"})")));
}

TEST_CASE("estimate on identical rows") {
    ExperimentConfig c;
    c.input = write_temp("same.csv", "1,1\n1,1\n1,1\n1,1\n");
    c.r = 1.0;
    c.delta = 0.1;
    const auto res = cmd_estimate(c);
    CHECK(res.report["G"].get<double>() == 0.0);
    CHECK(res.report["T"].get<double>() == 0.25);
    CHECK_FALSE(res.warnings.empty());
    REQUIRE(res.csv);
    CHECK(res.csv->rfind("# config: ", 0) == 0);
    c.hypothesis_strict = true;
    CHECK_THROWS_AS(run_command("estimate", c), HypothesisError);
}

TEST_CASE("estimate on symbols") {
    ExperimentConfig c;
    c.input = write_temp("symbols.csv", "a\na\nb\nc\n");
    c.r = 0.5;
    const auto res = cmd_estimate(c);
    CHECK(res.report["G"].get<double>() == 0.5);
    CHECK(res.report["h_exact"]["value"].get<int>() == 1);
}

TEST_CASE("estimate requires a radius and an input") {
    ExperimentConfig c;
    c.input = write_temp("one.csv", "0\n");
    CHECK_THROWS_AS(cmd_estimate(c), ArgumentError);
    ExperimentConfig d;
    d.r = 1.0;
    CHECK_THROWS(cmd_estimate(d));
}

TEST_CASE("bounds command echoes the requested evaluations") {
    ExperimentConfig c;
    c.n = 100;
    c.expected_h = 1.0;
    c.t_values = {1.0};
    c.m_values = {50};
    const auto res = cmd_bounds(c);
    CHECK(res.report["E_h"].get<double>() == 1.0);
    CHECK(res.report["martingale"][0]["m"].get<int>() == 50);
    CHECK(res.warnings.empty());
    c.n = 10;
    c.m_values.clear();
    CHECK_FALSE(cmd_bounds(c).warnings.empty());
}

TEST_CASE("simulation output is independent of repetition and workers") {
    auto c = simulate_config();
    const auto a = run_command("simulate", c);
    const auto b = run_command("simulate", c);
    c.workers = 3;
    const auto w = run_command("simulate", c);
    CHECK(dump_json(a.report) == dump_json(b.report));
    CHECK(dump_json(a.report) == dump_json(w.report));
    CHECK(*a.csv == *w.csv);
    c.seed = 8;
    CHECK(dump_json(run_command("simulate", c).report) != dump_json(a.report));
}

TEST_CASE("simulation aggregates agree with the analytic mean") {
    auto c = simulate_config();
    c.replicates = 400;
    const auto res = cmd_simulate(c);
    const auto& agg = res.report["aggregate"];
    const double m = agg["expected_missing_mass"].get<double>();
    const double g = agg["G"]["mean"].get<double>();
    const double se = agg["G"]["se_mean"].get<double>();
    CHECK(g >= m - 4 * se);
    CHECK(g <= m + 1.0 / 40 + 4 * se);
}

TEST_CASE("wasserstein command rejects bad grids") {
    ExperimentConfig c;
    c.distribution = UniformInterval{0, 1};
    c.n = 50;
    c.r_grid = {0.1, -1.0};
    CHECK_THROWS_AS(run_command("wasserstein", c), ArgumentError);
    c.r_grid = {0.05, 0.1};
    const auto res = run_command("wasserstein", c);
    CHECK(res.report["rows"].size() == 2);
    CHECK(res.report["sandwich_lower_ok"].get<bool>());
}

TEST_CASE("classify and code commands") {
    ExperimentConfig c;
    c.input = write_temp("train.csv", "0\n1\n2\n3\n");
    c.gamma = 0.5;
    c.queries = write_temp("queries.csv", "0.2\n10\n");
    const auto res = run_command("classify", c);
    CHECK(res.report["anomalous"].get<int>() == 1);
    REQUIRE(res.csv);

    ExperimentConfig k;
    k.input = c.input;
    k.epsilon = 0.5;
    k.diameter = 3.0;
    const auto coded = run_command("code", k);
    CHECK(coded.report["coding"]["codebook"].size() >= 1);
}

TEST_CASE("unknown commands are argument errors") {
    CHECK_THROWS_AS(run_command("frobnicate", ExperimentConfig{}), ArgumentError);
}

TEST_CASE("tables render") {
    ExperimentConfig c;
    c.n = 100;
    const auto res = cmd_bounds(c);
    CHECK_FALSE(render_table(res.report).empty());
}
