#pragma once

#include "missmass/sample.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace missmass {

enum class EstimateMethod { good_turing, martingale, martingale_min, net_bound };
enum class Side { two_sided, upper, lower };

std::string to_string(EstimateMethod method);
std::string to_string(Side side);

/// A point estimate or one-sided bound on the conditional missing mass.
struct Estimate {
    /// Clipped to [0,1].
    double value = 0.0;
    EstimateMethod method = EstimateMethod::good_turing;
    /// Sub-sample size m for martingale estimates (the minimiser for martingale_min).
    std::optional<std::size_t> m;
    std::optional<double> delta;
    /// Two-sided half width, or the one-sided slack added to the empirical part.
    std::optional<double> radius;
    Side side = Side::two_sided;
    /// Value before clipping.
    double raw_value = 0.0;
    /// The bound carries no information: pre-clip upper bound >= 1, or a
    /// two-sided half width >= 1.
    bool vacuous = false;
};

/// Fraction of sample points farther than r from every other sample point.
double good_turing(const Sample& sample, Radius r);

/// Per-index indicator that X_k escapes the closed r-balls of all strictly
/// earlier points. Index 0 always escapes (empty intersection).
std::vector<char> escape_indicators(const Sample& sample, Radius r);

/// Average of the escape indicators over the last m indices, 1 <= m <= n.
double martingale_estimate(const Sample& sample, Radius r, std::size_t m);

/// T_m for every m = 1..n; element m-1 holds T_m.
std::vector<double> martingale_all(const Sample& sample, Radius r);

/// min over m of T_m + sqrt(ln(n/delta)/(2m)), clipped to [0,1]; an upper
/// confidence bound on the conditional missing mass at level 1-delta.
Estimate martingale_upper_bound(const Sample& sample, Radius r, double delta);

/// G with the Chebyshev half width 1/n + sqrt(3/(n delta)).
Estimate good_turing_interval(const Sample& sample, Radius r, double delta);

/// m/n + sqrt(m ln(n/delta)/n) for a verified r-net of size m.
/// Throws InvalidNetError if the net fails separation or coverage.
Estimate net_missing_mass_bound(const Sample& sample, Radius r, std::span<const std::size_t> net, double delta);

/// sqrt(min(n-m, m) ln(n/delta) / m): the uniform slack of the martingale
/// estimator over all sub-samples of size m.
double subsample_supremum_slack(std::size_t n, std::size_t m, double delta);

/// Throws ArgumentError unless delta lies in (0,1).
void require_probability(double delta, const char* name = "delta");

} // namespace missmass
