#include "missmass/cli/commands.hpp"

#include "missmass/applications.hpp"
#include "missmass/bounds.hpp"
#include "missmass/estimators.hpp"
#include "missmass/oracles.hpp"
#include "missmass/parallel.hpp"
#include "missmass/separation.hpp"
#include "missmass/stats.hpp"
#include "missmass/wasserstein.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace missmass::cli {

namespace {

const std::vector<double> kDefaultTailT = {1.0, 3.0};

Json base_report(const std::string& command, const ExperimentConfig& config) {
    Json j;
    j["command"] = command;
    j["seed"] = config.seed;
    j["config"] = to_json(config);
    return j;
}

std::string csv_preamble(const ExperimentConfig& config) {
    return "# config: " + dump_json(to_json(config), -1) + "\n# seed: " + std::to_string(config.seed) + "\n";
}

Radius require_radius(const std::optional<double>& value, const char* name) {
    if (!value) throw ArgumentError(std::string("missing required setting '") + name + "'");
    return Radius(*value);
}

Sample load_input(const ExperimentConfig& config) {
    if (!config.input) throw ArgumentError("missing required setting 'input'");
    return load_sample(*config.input, space_request(config), header_mode(config));
}

void collect(CommandResult& result, const BoundReport& report) {
    for (const auto& w : report.warnings) {
        if (std::find(result.warnings.begin(), result.warnings.end(), w) == result.warnings.end()) {
            result.warnings.push_back(w);
        }
    }
}

std::string cell(double v) { return format_double(v); }

// Observed h used for E[h] estimates: the exact value when certified, otherwise
// the smallest certified upper bound.
std::pair<std::size_t, std::string> certified_h(const SeparationReport& exact, const SeparationReport& clique,
                                                const MetricSpace& space) {
    if (exact.certified == Certification::exact) return {exact.value, "h_exact"};
    std::size_t value = clique.value;
    std::string source = "h_clique_relaxed";
    if (auto cap = packing_cap(space); cap && *cap < value) {
        value = static_cast<std::size_t>(*cap);
        source = "packing_cap";
    }
    return {value, source};
}

Json concentration_bounds(CommandResult& result, double eh, std::size_t n, const std::vector<double>& ts) {
    Json bounds = Json::array();
    auto add = [&](const BoundReport& b) {
        collect(result, b);
        bounds.push_back(to_json(b));
    };
    add(variance_bound_G(eh, n));
    if (n >= 2) add(variance_bound_Mhat(eh, n));
    for (double t : ts) {
        add(tail_bound_G(eh, n, t));
        if (n >= 2) add(tail_bound_Mhat(eh, n, t));
    }
    const auto [gv, gl] = gt_error_bounds(n);
    add(gv);
    add(gl);
    return bounds;
}

} // namespace

CommandResult cmd_estimate(const ExperimentConfig& config) {
    CommandResult result;
    const Sample sample = load_input(config);
    const Radius r = require_radius(config.r, "r");
    const std::size_t n = sample.size();
    if (n == 0) throw ArgumentError("input contains no points");

    Json j = base_report("estimate", config);
    j["n"] = n;
    j["r"] = r.value();
    j["delta"] = config.delta;
    j["space"] = to_json(sample.space());

    const auto t = martingale_all(sample, r);
    j["G"] = good_turing(sample, r);
    j["T"] = t.back();
    j["good_turing_interval"] = to_json(good_turing_interval(sample, r, config.delta));
    j["martingale_upper_bound"] = to_json(martingale_upper_bound(sample, r, config.delta));

    const IndexList net = farthest_first_net(sample, r, 0);
    Json jn;
    jn["size"] = net.size();
    jn["indices"] = net;
    jn["bound"] = to_json(net_missing_mass_bound(sample, r, net, config.delta));
    j["net"] = jn;

    const SeparationReport hx = h_exact(sample, r, config.cap);
    const SeparationReport hc = h_clique_relaxed(sample, r);
    j["h_exact"] = to_json(hx);
    j["h_clique_relaxed"] = to_json(hc);
    const auto cap = packing_cap(sample.space());
    j["packing_cap"] = cap ? Json(*cap) : Json(nullptr);

    Json eh;
    double eh_value = 0.0;
    if (config.expected_h) {
        eh_value = *config.expected_h;
        eh["source"] = "config";
    } else {
        const auto [h_obs, source] = certified_h(hx, hc, sample.space());
        eh_value = eh_upper_from_sample(h_obs, config.delta);
        eh["source"] = "sample";
        eh["h_observed"] = h_obs;
        eh["h_observed_source"] = source;
    }
    eh["value"] = eh_value;
    j["expected_h"] = eh;
    const std::vector<double> ts = config.t_values.empty() ? kDefaultTailT : config.t_values;
    j["bounds"] = concentration_bounds(result, eh_value, n, ts);
    j["warnings"] = result.warnings;

    std::ostringstream csv;
    csv << csv_preamble(config) << "m,T_m,slack,upper\n";
    const double log_term = std::log(static_cast<double>(n) / config.delta);
    for (std::size_t m = 1; m <= n; ++m) {
        const double slack = std::sqrt(log_term / (2.0 * static_cast<double>(m)));
        csv << m << ',' << cell(t[m - 1]) << ',' << cell(slack) << ',' << cell(t[m - 1] + slack) << '\n';
    }
    result.report = std::move(j);
    result.csv = csv.str();
    return result;
}

namespace {

struct Replicate {
    double g = 0.0;
    std::vector<double> t_m;
    double mhat = 0.0;
    double h_smoothed = 0.0;
    double h = 0.0;
    bool event_b = false;
};

bool is_basis_like(const DistributionSpec& mu) {
    return std::holds_alternative<SphereAtom>(mu) || std::holds_alternative<BasisUniform>(mu);
}

Json frequency_json(std::size_t hits, std::size_t total, double bound) {
    const double f = static_cast<double>(hits) / static_cast<double>(total);
    Json j;
    j["frequency"] = f;
    j["se"] = frequency_se(f, total);
    j["bound"] = bound;
    j["within_3se"] = f <= bound + 3.0 * frequency_se(f, total);
    return j;
}

} // namespace

CommandResult cmd_simulate(const ExperimentConfig& config) {
    if (!config.distribution) throw ArgumentError("simulate needs a 'distribution'");
    const DistributionSpec& mu = *config.distribution;
    const Radius r = require_radius(config.r, "r");
    const std::size_t n = config.n;
    const std::size_t reps = config.replicates;

    std::set<std::string> est(config.estimators.begin(), config.estimators.end());
    if (est.empty()) est = {"good_turing", "martingale", "oracle"};
    const std::set<std::string> allowed = {"good_turing", "martingale", "oracle", "smoothed", "h"};
    for (const auto& e : est) {
        if (!allowed.count(e)) throw ArgumentError("unknown estimator '" + e + "'");
    }
    const bool want_oracle = est.count("oracle") > 0;
    const bool want_smoothed = est.count("smoothed") > 0;
    const bool want_h = est.count("h") > 0;

    std::vector<std::size_t> ms = config.m_values;
    if (ms.empty()) ms = n >= 2 ? std::vector<std::size_t>{n / 2, n} : std::vector<std::size_t>{n};
    for (std::size_t m : ms) {
        if (m < 1 || m > n) throw ArgumentError("m_values entries must lie in [1, n]");
    }
    const std::vector<double> ts = config.t_values.empty() ? std::vector<double>{0.1, 0.2} : config.t_values;
    for (double t : ts) {
        if (!(t > 0.0)) throw ArgumentError("t_values entries must be positive");
    }
    validate(mu);

    auto run_one = [&](std::size_t rep) {
        try {
            Rng rng = Rng::stream(config.seed, 2 * rep);
            const Sample sample = draw_sample(mu, n, rng);
            Replicate out;
            out.g = good_turing(sample, r);
            const auto t = martingale_all(sample, r);
            for (std::size_t m : ms) out.t_m.push_back(t[m - 1]);
            OracleOptions oracle;
            oracle.test_points = config.test_points;
            oracle.alpha = config.alpha;
            oracle.seed = splitmix64(config.seed, 2 * rep + 1);
            if (want_oracle) out.mhat = conditional_missing_mass(mu, sample, r, oracle).value;
            if (want_smoothed) out.h_smoothed = smoothed_oracle_H(mu, sample, r, oracle).value;
            if (want_h) out.h = static_cast<double>(h_exact(sample, r, config.cap).value);
            if (is_basis_like(mu)) {
                IndexList all(n);
                std::iota(all.begin(), all.end(), std::size_t{0});
                bool inside = true;
                for (std::size_t i = 0; i < n; ++i) {
                    double norm = 0.0;
                    for (double v : sample.point(i)) norm += v * v;
                    inside = inside && norm <= 1.0;
                }
                out.event_b = inside && is_r_separated(sample, all, r);
            }
            return out;
        } catch (const Error& e) {
            throw Error("replicate " + std::to_string(rep) + ": " + e.what());
        }
    };
    const std::vector<Replicate> rows = parallel_map<Replicate>(reps, config.workers, run_one);

    CommandResult result;
    Json j = base_report("simulate", config);
    j["distribution"] = to_json(mu);
    j["n"] = n;
    j["r"] = r.value();

    auto column = [&](auto getter) {
        std::vector<double> v;
        v.reserve(reps);
        for (const auto& row : rows) v.push_back(getter(row));
        return v;
    };
    const auto g = column([](const Replicate& x) { return x.g; });
    const auto mh = column([](const Replicate& x) { return x.mhat; });
    const Summary sg = summarize(g);

    Json agg;
    agg["replicates"] = reps;
    agg["G"] = to_json(sg);

    const auto m_analytic = analytic_expected_missing_mass(mu, n, r);
    bool have_eg = false;
    double expected_g = 0.0;
    if (n >= 2) {
        if (auto v = analytic_expected_missing_mass(mu, n - 1, r)) {
            have_eg = true;
            expected_g = *v;
        }
    }
    agg["expected_missing_mass"] = nullptr;
    agg["expected_G"] = nullptr;
    if (m_analytic) agg["expected_missing_mass"] = m_analytic.value();
    if (have_eg) agg["expected_G"] = expected_g;
    if (m_analytic) {
        Json bias;
        bias["mean"] = sg.mean - *m_analytic;
        bias["se"] = sg.se_mean;
        bias["lower"] = 0.0;
        bias["upper"] = 1.0 / static_cast<double>(n);
        const double d = sg.mean - *m_analytic;
        bias["within_3se"] = d >= -3.0 * sg.se_mean && d <= 1.0 / static_cast<double>(n) + 3.0 * sg.se_mean;
        agg["bias_G"] = bias;
    }

    std::optional<double> eh;
    std::string eh_source;
    if (config.expected_h) {
        eh = config.expected_h;
        eh_source = "config";
    } else if (want_h) {
        eh = std::max(1.0, summarize(column([](const Replicate& x) { return x.h; })).mean);
        eh_source = "mean_h";
        agg["h"] = to_json(summarize(column([](const Replicate& x) { return x.h; })));
    } else if (auto cap = packing_cap(natural_space(mu)); cap && *cap == 1) {
        eh = 1.0;
        eh_source = "packing_cap";
    }

    Json var;
    var["E_h"] = eh ? Json(*eh) : Json(nullptr);
    var["E_h_source"] = eh ? Json(eh_source) : Json(nullptr);
    Json vg;
    vg["empirical"] = sg.variance;
    vg["se"] = sg.se_variance;
    if (eh) {
        const BoundReport b = variance_bound_G(*eh, n);
        collect(result, b);
        vg["bound"] = to_json(b);
        vg["within_3se"] = sg.variance <= b.value + 3.0 * sg.se_variance;
    }
    var["G"] = vg;

    if (want_oracle) {
        const Summary sm = summarize(mh);
        agg["Mhat"] = to_json(sm);
        Json vm;
        vm["empirical"] = sm.variance;
        vm["se"] = sm.se_variance;
        if (eh && n >= 2) {
            const BoundReport b = variance_bound_Mhat(*eh, n);
            collect(result, b);
            vm["bound"] = to_json(b);
            vm["within_3se"] = sm.variance <= b.value + 3.0 * sm.se_variance;
        }
        var["Mhat"] = vm;

        std::vector<double> sq(reps);
        for (std::size_t i = 0; i < reps; ++i) sq[i] = (g[i] - mh[i]) * (g[i] - mh[i]);
        const Summary ss = summarize(sq);
        Json rms;
        rms["value"] = std::sqrt(ss.mean);
        rms["mean_square_se"] = ss.se_mean;
        rms["bound"] = std::sqrt(7.0 / static_cast<double>(n));
        agg["rms_G_minus_Mhat"] = rms;

        Json mart = Json::array();
        for (std::size_t k = 0; k < ms.size(); ++k) {
            const std::size_t m = ms[k];
            std::vector<double> diff(reps);
            for (std::size_t i = 0; i < reps; ++i) diff[i] = rows[i].t_m[k] - mh[i];
            const Summary sd = summarize(diff);
            Json jm;
            jm["m"] = m;
            jm["T_m"] = to_json(summarize(column([k](const Replicate& x) { return x.t_m[k]; })));
            Json bias;
            bias["mean"] = sd.mean;
            bias["se"] = sd.se_mean;
            if (m < n) {
                bias["bound"] = martingale_bias_bound(n, m).value;
                bias["within_3se"] = sd.mean <= martingale_bias_bound(n, m).value + 3.0 * sd.se_mean;
            }
            jm["bias"] = bias;
            Json tails = Json::array();
            for (double t : ts) {
                std::size_t plain = 0;
                std::size_t relative = 0;
                for (std::size_t i = 0; i < reps; ++i) {
                    plain += (mh[i] - rows[i].t_m[k] > t) ? 1 : 0;
                    relative += (mh[i] - 2.0 * rows[i].t_m[k] > t) ? 1 : 0;
                }
                Json jt;
                jt["t"] = t;
                jt["tail"] = frequency_json(plain, reps, *martingale_tail_bound(m, t).probability);
                jt["relative_tail"] = frequency_json(relative, reps, *martingale_relative_tail_bound(m, t).probability);
                tails.push_back(jt);
            }
            jm["tails"] = tails;
            mart.push_back(jm);
        }
        agg["martingale"] = mart;

        if (eh && n >= 2) {
            const double eg = have_eg ? expected_g : sg.mean;
            const double em = m_analytic.value_or(sm.mean);
            Json tt = Json::array();
            for (double t : kDefaultTailT) {
                const BoundReport bg = tail_bound_G(*eh, n, t);
                const BoundReport bm = tail_bound_Mhat(*eh, n, t);
                collect(result, bg);
                collect(result, bm);
                std::size_t hg = 0;
                std::size_t hm = 0;
                for (std::size_t i = 0; i < reps; ++i) {
                    hg += std::abs(g[i] - eg) > bg.value ? 1 : 0;
                    hm += std::abs(mh[i] - em) > bm.value ? 1 : 0;
                }
                Json jt;
                jt["t"] = t;
                jt["G"] = frequency_json(hg, reps, *bg.probability);
                jt["G"]["threshold"] = bg.value;
                jt["Mhat"] = frequency_json(hm, reps, *bm.probability);
                jt["Mhat"]["threshold"] = bm.value;
                tt.push_back(jt);
            }
            agg["concentration_tails"] = tt;
            agg["centre_G"] = have_eg ? "analytic" : "empirical";
            agg["centre_Mhat"] = m_analytic ? "analytic" : "empirical";
        }
    }
    agg["variance"] = var;
    if (want_smoothed) agg["H"] = to_json(summarize(column([](const Replicate& x) { return x.h_smoothed; })));
    if (is_basis_like(mu)) {
        std::size_t hits = 0;
        for (const auto& row : rows) hits += row.event_b ? 1 : 0;
        const double f = static_cast<double>(hits) / static_cast<double>(reps);
        Json b;
        b["frequency"] = f;
        b["se"] = frequency_se(f, reps);
        agg["separated_unit_event"] = b;
    }
    j["aggregate"] = agg;
    j["warnings"] = result.warnings;

    std::ostringstream csv;
    csv << csv_preamble(config) << "replicate,G";
    for (std::size_t m : ms) csv << ",T_" << m;
    if (want_oracle) csv << ",Mhat";
    if (want_smoothed) csv << ",H";
    if (want_h) csv << ",h";
    csv << '\n';
    for (std::size_t i = 0; i < reps; ++i) {
        csv << i << ',' << cell(rows[i].g);
        for (double v : rows[i].t_m) csv << ',' << cell(v);
        if (want_oracle) csv << ',' << cell(rows[i].mhat);
        if (want_smoothed) csv << ',' << cell(rows[i].h_smoothed);
        if (want_h) csv << ',' << cell(rows[i].h);
        csv << '\n';
    }
    result.report = std::move(j);
    result.csv = csv.str();
    return result;
}

CommandResult cmd_bounds(const ExperimentConfig& config) {
    CommandResult result;
    const double eh = config.expected_h.value_or(1.0);
    Json j = base_report("bounds", config);
    j["n"] = config.n;
    j["E_h"] = eh;
    const std::vector<double> ts = config.t_values.empty() ? kDefaultTailT : config.t_values;
    j["bounds"] = concentration_bounds(result, eh, config.n, ts);

    Json mart = Json::array();
    for (std::size_t m : config.m_values) {
        if (m < 1 || m > config.n) throw ArgumentError("m_values entries must lie in [1, n]");
        Json jm;
        jm["m"] = m;
        Json tails = Json::array();
        for (double t : ts) {
            tails.push_back(to_json(martingale_tail_bound(m, t)));
            tails.push_back(to_json(martingale_relative_tail_bound(m, t)));
        }
        jm["tails"] = tails;
        if (m < config.n) jm["bias"] = to_json(martingale_bias_bound(config.n, m));
        jm["subsample_supremum_slack"] = subsample_supremum_slack(config.n, m, config.delta);
        mart.push_back(jm);
    }
    j["martingale"] = mart;
    j["warnings"] = result.warnings;
    result.report = std::move(j);
    return result;
}

CommandResult cmd_wasserstein(const ExperimentConfig& config) {
    CommandResult result;
    std::optional<Sample> sample;
    if (config.input) {
        sample.emplace(load_input(config));
    } else if (config.distribution) {
        Rng rng = Rng::stream(config.seed, 0);
        sample.emplace(draw_sample(*config.distribution, config.n, rng));
    } else {
        throw ArgumentError("wasserstein needs an 'input' file or a 'distribution'");
    }
    std::vector<Radius> grid;
    for (double v : config.r_grid) grid.emplace_back(v);
    if (grid.empty()) grid = default_r_grid(*sample, config.grid_count);

    WassersteinOptions options;
    options.margin = config.margin;
    options.diameter = config.diameter;
    options.oracle.test_points = config.test_points;
    options.oracle.alpha = config.alpha;
    options.oracle.seed = splitmix64(config.seed, 1);
    const auto rows = w1_report(*sample, config.distribution, grid, config.delta, options);

    Json j = base_report("wasserstein", config);
    j["n"] = sample->size();
    j["delta"] = config.delta;
    j["scale"] = rows.front().scale;
    j["scale_source"] = config.diameter ? "declared" : "sample_diameter_times_margin";
    Json notes = Json::array();
    if (!config.diameter) {
        notes.push_back("distances normalised by the sample diameter times " + format_double(config.margin) +
                        "; the diameter-1 hypothesis is only approximated");
        if (config.hypothesis_strict) result.warnings.push_back(notes.back().get<std::string>());
    }
    Json jr = Json::array();
    for (const auto& row : rows) {
        jr.push_back(to_json(row));
        if (row.net_too_large) {
            result.warnings.push_back("net of size " + std::to_string(row.m) + " at r=" + format_double(row.r.value()) +
                                      " exceeds (n-3)/2; upper bounds omitted");
        }
    }
    j["rows"] = jr;
    j["best_lower"] = best_lower(rows);
    const auto up = best_upper(rows);
    j["best_upper"] = up ? Json(*up) : Json(nullptr);
    std::optional<double> exact;
    if (config.distribution) {
        try {
            exact = exact_wasserstein_1d(*config.distribution, *sample);
        } catch (const UnsupportedError&) {
        }
    }
    j["exact_w1"] = exact ? Json(*exact) : Json(nullptr);
    if (exact) {
        j["sandwich_lower_ok"] = best_lower(rows) <= *exact;
        j["sandwich_upper_ok"] = up ? Json(*exact <= *up) : Json(nullptr);
    }
    j["notes"] = notes;
    j["warnings"] = result.warnings;

    std::ostringstream csv;
    csv << csv_preamble(config) << "r,m,lower,mhat_lower,mhat_upper,upper_a,upper_b,net_too_large\n";
    auto opt_cell = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
    for (const auto& row : rows) {
        csv << cell(row.r.value()) << ',' << row.m << ',' << cell(row.lower) << ',' << cell(row.mhat_lower) << ','
            << opt_cell(row.mhat_upper) << ',' << opt_cell(row.upper_a) << ',' << opt_cell(row.upper_b) << ','
            << (row.net_too_large ? 1 : 0) << '\n';
    }
    result.report = std::move(j);
    result.csv = csv.str();
    return result;
}

CommandResult cmd_classify(const ExperimentConfig& config) {
    CommandResult result;
    std::optional<ProximityClassifier> classifier;
    if (config.classifier) {
        std::ifstream in(*config.classifier);
        if (!in) throw IoError("cannot open classifier file '" + *config.classifier + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        classifier.emplace(classifier_from_json(ss.str()));
    } else {
        classifier.emplace(load_input(config), require_radius(config.gamma, "gamma"));
    }
    if (config.save_classifier) {
        std::ofstream out(*config.save_classifier);
        if (!out) throw IoError("cannot write classifier file '" + *config.save_classifier + "'");
        out << classifier_to_json(*classifier) << '\n';
    }
    const CertificateMethod method = certificate_method_from_string(config.method);

    Json j = base_report("classify", config);
    j["n_training"] = classifier->training().size();
    j["gamma"] = classifier->gamma().value();
    j["space"] = to_json(classifier->training().space());
    j["false_alarm_certificate"] = to_json(false_alarm_certificate(*classifier, config.delta, method));

    if (config.queries) {
        std::ifstream in(*config.queries);
        if (!in) throw IoError("cannot open query file '" + *config.queries + "'");
        std::ostringstream table;
        const std::size_t anomalous = classify_csv(*classifier, in, table, header_mode(config));
        result.csv = csv_preamble(config) + table.str();
        j["anomalous"] = anomalous;
    }
    result.report = std::move(j);
    return result;
}

CommandResult cmd_code(const ExperimentConfig& config) {
    CommandResult result;
    const Sample sample = load_input(config);
    const Radius epsilon = require_radius(config.epsilon, "epsilon");
    const CodingReport report = coding_report(sample, epsilon, config.delta, config.use_net, config.diameter);

    Json j = base_report("code", config);
    j["n"] = sample.size();
    j["coding"] = to_json(report);

    const Sample codebook = sample.select(report.codebook);
    std::ostringstream csv;
    csv << csv_preamble(config) << "index,code,codeword_index,distance\n";
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const std::size_t code = nn_encode(codebook, sample.point(i));
        const std::size_t word = report.codebook[code];
        csv << i << ',' << code << ',' << word << ',' << cell(sample.distance(i, word)) << '\n';
    }
    result.report = std::move(j);
    result.csv = csv.str();
    return result;
}

CommandResult run_command(const std::string& name, const ExperimentConfig& config) {
    validate_config(config);
    CommandResult result;
    if (name == "estimate") {
        result = cmd_estimate(config);
    } else if (name == "simulate") {
        result = cmd_simulate(config);
    } else if (name == "bounds") {
        result = cmd_bounds(config);
    } else if (name == "wasserstein") {
        result = cmd_wasserstein(config);
    } else if (name == "classify") {
        result = cmd_classify(config);
    } else if (name == "code") {
        result = cmd_code(config);
    } else {
        throw ArgumentError("unknown command '" + name + "'");
    }
    if (config.hypothesis_strict && !result.warnings.empty()) {
        std::string message = "hypothesis violated:";
        for (const auto& w : result.warnings) message += " " + w + ";";
        throw HypothesisError(message);
    }
    return result;
}

namespace {

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (prefix.empty() && it.key() == "config") continue;
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        }
    } else if (j.is_array()) {
        bool scalars = true;
        for (const auto& item : j) scalars = scalars && !item.is_structured();
        if (scalars && j.size() <= 8) {
            out.emplace_back(prefix, dump_json(j, -1));
        } else if (!scalars) {
            for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
        }
    } else {
        out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : dump_json(j, -1));
    }
}

} // namespace

std::string render_table(const Json& report) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    std::ostringstream out;
    for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
    return out.str();
}

} // namespace missmass::cli
