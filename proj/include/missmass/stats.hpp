#pragma once

#include <cstddef>
#include <span>

namespace missmass {

/// Moments of a batch of Monte Carlo outputs.
struct Summary {
    std::size_t count = 0;
    double mean = 0.0;
    /// Unbiased sample variance.
    double variance = 0.0;
    /// Standard error of the mean.
    double se_mean = 0.0;
    /// Large-sample standard error of the variance estimate, from the fourth
    /// central moment.
    double se_variance = 0.0;
};

Summary summarize(std::span<const double> values);

/// Standard error of a frequency estimate p-hat from `count` trials.
double frequency_se(double frequency, std::size_t count);

/// sqrt(ln(2/alpha)/(2N)): two-sided Hoeffding half width for a mean of N
/// values in [0,1].
double hoeffding_half_width(std::size_t count, double alpha);

} // namespace missmass
