#include "missmass/estimators.hpp"

#include "missmass/errors.hpp"

#include <algorithm>
#include <cmath>

namespace missmass {

std::string to_string(EstimateMethod method) {
    switch (method) {
    case EstimateMethod::good_turing: return "good_turing";
    case EstimateMethod::martingale: return "martingale";
    case EstimateMethod::martingale_min: return "martingale_min";
    case EstimateMethod::net_bound: return "net_bound";
    }
    return "unknown";
}

std::string to_string(Side side) {
    switch (side) {
    case Side::two_sided: return "two_sided";
    case Side::upper: return "upper";
    case Side::lower: return "lower";
    }
    return "unknown";
}

void require_probability(double delta, const char* name) {
    if (!(delta > 0.0 && delta < 1.0)) throw ArgumentError(std::string(name) + " must lie in (0,1)");
}

namespace {

void require_nonempty(const Sample& sample) {
    if (sample.empty()) throw ArgumentError("estimator needs a non-empty sample");
}

Estimate upper_estimate(double raw, EstimateMethod method, double delta, double slack) {
    Estimate e;
    e.raw_value = raw;
    e.value = std::clamp(raw, 0.0, 1.0);
    e.method = method;
    e.delta = delta;
    e.radius = slack;
    e.side = Side::upper;
    e.vacuous = raw >= 1.0;
    return e;
}

} // namespace

double good_turing(const Sample& sample, Radius r) {
    require_nonempty(sample);
    const std::size_t n = sample.size();
    std::size_t lonely = 0;
    for (std::size_t k = 0; k < n; ++k) {
        bool escapes = true;
        for (std::size_t i = 0; i < n && escapes; ++i) {
            if (i != k && sample.distance(k, i) <= r.value()) escapes = false;
        }
        lonely += escapes ? 1 : 0;
    }
    return static_cast<double>(lonely) / static_cast<double>(n);
}

std::vector<char> escape_indicators(const Sample& sample, Radius r) {
    const std::size_t n = sample.size();
    std::vector<char> escaped(n, 1);
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = 0; i < k; ++i) {
            if (sample.distance(k, i) <= r.value()) {
                escaped[k] = 0;
                break;
            }
        }
    }
    return escaped;
}

double martingale_estimate(const Sample& sample, Radius r, std::size_t m) {
    require_nonempty(sample);
    if (m < 1 || m > sample.size()) throw ArgumentError("m must lie in [1, n]");
    return martingale_all(sample, r)[m - 1];
}

std::vector<double> martingale_all(const Sample& sample, Radius r) {
    require_nonempty(sample);
    const auto escaped = escape_indicators(sample, r);
    const std::size_t n = sample.size();
    std::vector<double> t(n);
    std::size_t tail = 0;
    for (std::size_t m = 1; m <= n; ++m) {
        tail += escaped[n - m] ? 1 : 0;
        t[m - 1] = static_cast<double>(tail) / static_cast<double>(m);
    }
    return t;
}

Estimate martingale_upper_bound(const Sample& sample, Radius r, double delta) {
    require_probability(delta);
    const auto t = martingale_all(sample, r);
    const double n = static_cast<double>(sample.size());
    const double log_term = std::log(n / delta);
    double best = 0.0;
    double best_slack = 0.0;
    std::size_t best_m = 0;
    for (std::size_t m = 1; m <= t.size(); ++m) {
        const double slack = std::sqrt(log_term / (2.0 * static_cast<double>(m)));
        const double v = t[m - 1] + slack;
        if (best_m == 0 || v < best) {
            best = v;
            best_slack = slack;
            best_m = m;
        }
    }
    Estimate e = upper_estimate(best, EstimateMethod::martingale_min, delta, best_slack);
    e.m = best_m;
    return e;
}

Estimate good_turing_interval(const Sample& sample, Radius r, double delta) {
    require_probability(delta);
    const double n = static_cast<double>(sample.size());
    Estimate e;
    e.value = good_turing(sample, r);
    e.raw_value = e.value;
    e.method = EstimateMethod::good_turing;
    e.delta = delta;
    e.radius = 1.0 / n + std::sqrt(3.0 / (n * delta));
    e.side = Side::two_sided;
    e.vacuous = *e.radius >= 1.0;
    return e;
}

Estimate net_missing_mass_bound(const Sample& sample, Radius r, std::span<const std::size_t> net, double delta) {
    require_probability(delta);
    require_nonempty(sample);
    require_r_net(sample, net, r);
    const double n = static_cast<double>(sample.size());
    const double m = static_cast<double>(net.size());
    const double slack = std::sqrt(m * std::log(n / delta) / n);
    Estimate e = upper_estimate(m / n + slack, EstimateMethod::net_bound, delta, slack);
    e.m = net.size();
    return e;
}

double subsample_supremum_slack(std::size_t n, std::size_t m, double delta) {
    require_probability(delta);
    if (m < 1 || m > n) throw ArgumentError("m must lie in [1, n]");
    const double nn = static_cast<double>(n);
    const double mm = static_cast<double>(m);
    return std::sqrt(std::min(nn - mm, mm) * std::log(nn / delta) / mm);
}

} // namespace missmass
