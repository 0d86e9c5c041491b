#pragma once

#include "missmass/distributions.hpp"
#include "missmass/oracles.hpp"
#include "missmass/sample.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace missmass {

/// Two-sided bounds on W1(mu, empirical measure) at one radius.
///
/// Distances are rescaled by `scale` so that the space has diameter 1; every
/// number here is reported back in the original units.
struct WassersteinReport {
    Radius r;
    double delta = 0.0;
    std::size_t m = 0;
    IndexList net_indices;
    double scale = 1.0;

    /// r times a value certified not to exceed the missing mass.
    double lower = 0.0;
    double mhat_lower = 0.0;
    std::optional<double> mhat_upper;
    /// "oracle", "good_turing" or "supplied".
    std::string mhat_source;

    std::optional<double> upper_a;
    std::optional<double> upper_a_raw;
    std::optional<double> upper_b;
    std::optional<double> upper_b_raw;
    /// The net is larger than (n-3)/2, so neither upper bound applies.
    bool net_too_large = false;
};

struct WassersteinOptions {
    /// Multiplier applied to the sample diameter to obtain the scale.
    double margin = 1.05;
    /// Declared diameter of the space; overrides the sample-based scale.
    std::optional<double> diameter;
    /// Split delta evenly across the grid points.
    bool bonferroni = true;
    OracleOptions oracle;
};

/// r * mhat.
double w1_lower_bound(double mhat, Radius r);

/// Scale used to normalise the sample: the declared diameter if any, else the
/// sample diameter times the margin. Throws ArgumentError if a declared
/// diameter is smaller than the sample diameter.
double normalization_scale(const Sample& sample, const WassersteinOptions& options);

/// Evaluates both upper bounds for a verified r-net with m <= (n-3)/2:
///   upper_a = mhat_upper + 3r + 2 sqrt(m/(n-m)) (1 + sqrt(ln(n/delta)))
///   upper_b = 3r + 3 sqrt(m/(n-m)) (1 + sqrt(ln(2n/delta)))
/// in normalised units, rescaled and clipped to the scale. Throws
/// InvalidNetError for a bad net and ArgumentError when m is too large.
WassersteinReport w1_upper_bounds(const Sample& sample, Radius r, std::span<const std::size_t> net, double delta,
                                  std::optional<double> mhat_upper, double scale);

/// Sweeps the grid: for each r builds a farthest-first net and evaluates the
/// bounds. With mu known the missing mass comes from the oracle; otherwise the
/// lower bound uses the Good-Turing lower confidence limit and upper_a the
/// martingale upper bound. Rows are sorted by r.
std::vector<WassersteinReport> w1_report(const Sample& sample, const std::optional<DistributionSpec>& mu,
                                         std::span<const Radius> r_grid, double delta,
                                         const WassersteinOptions& options = {});

/// `count` log-spaced radii between the 1% quantile and the median of the
/// pairwise distances (the smallest positive distance replaces a zero quantile).
std::vector<Radius> default_r_grid(const Sample& sample, std::size_t count = 20);

/// Largest lower bound over the rows.
double best_lower(std::span<const WassersteinReport> rows);
/// Smallest available upper bound over the rows, if any row has one.
std::optional<double> best_upper(std::span<const WassersteinReport> rows);

} // namespace missmass
