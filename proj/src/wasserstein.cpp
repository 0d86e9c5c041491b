#include "missmass/wasserstein.hpp"

#include "missmass/errors.hpp"
#include "missmass/estimators.hpp"

#include <algorithm>
#include <cmath>

namespace missmass {

double w1_lower_bound(double mhat, Radius r) {
    if (!(mhat >= 0.0 && mhat <= 1.0)) throw ArgumentError("missing mass must lie in [0,1]");
    return r.value() * mhat;
}

double normalization_scale(const Sample& sample, const WassersteinOptions& options) {
    const double diameter = sample_diameter(sample);
    if (options.diameter) {
        if (!(*options.diameter >= diameter)) throw ArgumentError("declared diameter is smaller than the sample diameter");
        return *options.diameter;
    }
    if (!(options.margin >= 1.0)) throw ArgumentError("diameter margin must be at least 1");
    return diameter * options.margin;
}

WassersteinReport w1_upper_bounds(const Sample& sample, Radius r, std::span<const std::size_t> net, double delta,
                                  std::optional<double> mhat_upper, double scale) {
    require_probability(delta);
    require_r_net(sample, net, r);
    if (!(scale >= 0.0) || !std::isfinite(scale)) throw ArgumentError("scale must be finite and non-negative");
    if (sample_diameter(sample) > scale) throw ArgumentError("sample diameter exceeds the normalisation scale");
    if (mhat_upper && !(*mhat_upper >= 0.0 && *mhat_upper <= 1.0)) {
        throw ArgumentError("missing mass upper bound must lie in [0,1]");
    }
    const std::size_t n = sample.size();
    const std::size_t m = net.size();
    if (2 * m + 3 > n) throw ArgumentError("net size m must satisfy m <= (n-3)/2");

    WassersteinReport report;
    report.r = r;
    report.delta = delta;
    report.m = m;
    report.net_indices.assign(net.begin(), net.end());
    report.scale = scale;

    const double nd = static_cast<double>(n);
    const double ratio = std::sqrt(static_cast<double>(m) / static_cast<double>(n - m));
    auto clip = [&](double v) { return scale > 0.0 ? std::min(v, scale) : v; };

    const double raw_b = 3.0 * r.value() + 3.0 * scale * ratio * (1.0 + std::sqrt(std::log(2.0 * nd / delta)));
    report.upper_b_raw = raw_b;
    report.upper_b = clip(raw_b);
    if (mhat_upper) {
        const double raw_a =
            scale * *mhat_upper + 3.0 * r.value() + 2.0 * scale * ratio * (1.0 + std::sqrt(std::log(nd / delta)));
        report.mhat_upper = mhat_upper;
        report.upper_a_raw = raw_a;
        report.upper_a = clip(raw_a);
    }
    return report;
}

std::vector<WassersteinReport> w1_report(const Sample& sample, const std::optional<DistributionSpec>& mu,
                                         std::span<const Radius> r_grid, double delta,
                                         const WassersteinOptions& options) {
    if (r_grid.empty()) throw ArgumentError("radius grid is empty");
    require_probability(delta);
    const double scale = normalization_scale(sample, options);
    const double row_delta = options.bonferroni ? delta / static_cast<double>(r_grid.size()) : delta;
    const std::size_t n = sample.size();

    std::vector<Radius> grid(r_grid.begin(), r_grid.end());
    std::sort(grid.begin(), grid.end());

    std::vector<WassersteinReport> rows;
    rows.reserve(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g) {
        const Radius r = grid[g];
        double mhat_lower = 0.0;
        double mhat_upper = 1.0;
        std::string source;
        if (mu) {
            OracleOptions oracle = options.oracle;
            oracle.seed = splitmix64(options.oracle.seed, g);
            const OracleEstimate m = conditional_missing_mass(*mu, sample, r, oracle);
            mhat_lower = std::max(0.0, m.value - m.half_width);
            mhat_upper = std::min(1.0, m.value + m.half_width);
            source = "oracle";
        } else {
            // Each empirical limit gets half of the row's failure budget.
            const Estimate gt = good_turing_interval(sample, r, row_delta / 2.0);
            mhat_lower = std::max(0.0, gt.value - *gt.radius);
            mhat_upper = martingale_upper_bound(sample, r, row_delta / 2.0).value;
            source = "good_turing";
        }

        const IndexList net = farthest_first_net(sample, r, 0);
        WassersteinReport row;
        if (2 * net.size() + 3 <= n) {
            row = w1_upper_bounds(sample, r, net, row_delta, mhat_upper, scale);
        } else {
            row.r = r;
            row.delta = row_delta;
            row.m = net.size();
            row.net_indices = net;
            row.scale = scale;
            row.mhat_upper = mhat_upper;
            row.net_too_large = true;
        }
        row.mhat_lower = mhat_lower;
        row.mhat_source = source;
        row.lower = w1_lower_bound(mhat_lower, r);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Radius> default_r_grid(const Sample& sample, std::size_t count) {
    if (count < 1) throw ArgumentError("grid needs at least one point");
    if (sample.size() < 2) throw ArgumentError("default grid needs at least two sample points");
    double lo = pairwise_distance_quantile(sample, 0.01);
    const double hi = pairwise_distance_quantile(sample, 0.5);
    if (lo <= 0.0) {
        double smallest = 0.0;
        for (std::size_t i = 0; i < sample.size(); ++i) {
            for (std::size_t j = i + 1; j < sample.size(); ++j) {
                const double d = sample.distance(i, j);
                if (d > 0.0 && (smallest == 0.0 || d < smallest)) smallest = d;
            }
        }
        lo = smallest;
    }
    if (!(lo > 0.0) || !(hi > 0.0)) throw ArgumentError("default grid needs positive pairwise distances");
    lo = std::min(lo, hi);
    std::vector<Radius> grid;
    grid.reserve(count);
    if (count == 1 || lo == hi) {
        grid.emplace_back(hi);
        return grid;
    }
    const double step = std::log(hi / lo) / static_cast<double>(count - 1);
    for (std::size_t k = 0; k < count; ++k) grid.emplace_back(lo * std::exp(step * static_cast<double>(k)));
    return grid;
}

double best_lower(std::span<const WassersteinReport> rows) {
    double best = 0.0;
    for (const auto& row : rows) best = std::max(best, row.lower);
    return best;
}

std::optional<double> best_upper(std::span<const WassersteinReport> rows) {
    std::optional<double> best;
    for (const auto& row : rows) {
        for (const auto& v : {row.upper_a, row.upper_b}) {
            if (v && (!best || *v < *best)) best = v;
        }
    }
    return best;
}

} // namespace missmass
