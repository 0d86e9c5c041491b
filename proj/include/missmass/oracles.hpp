#pragma once

#include "missmass/distributions.hpp"
#include "missmass/sample.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace missmass {

enum class OracleMethod { analytic, monte_carlo };

std::string to_string(OracleMethod method);

/// Ground-truth value of a distribution-dependent quantity. Analytic values
/// have half_width 0; Monte Carlo values carry a Hoeffding half width at the
/// stated confidence.
struct OracleEstimate {
    double value = 0.0;
    double half_width = 0.0;
    OracleMethod method = OracleMethod::analytic;
    /// Number of test points (or outer replicates) behind a Monte Carlo value.
    std::size_t draws = 0;
    double confidence = 1.0;
    std::uint64_t seed = 0;
};

struct OracleOptions {
    std::size_t test_points = 100000;
    double alpha = 0.01;
    std::uint64_t seed = 0;
    /// Skip closed forms even when one exists.
    bool force_monte_carlo = false;
};

/// mu{y : d(y, X_i) > r for every i}. Closed forms exist for discrete,
/// uniform_interval, real_atoms, scaled_indicator, sphere_atom and
/// basis_uniform; otherwise fresh test points are drawn from mu.
OracleEstimate conditional_missing_mass(const DistributionSpec& mu, const Sample& sample, Radius r,
                                        const OracleOptions& options = {});

/// Average of the n leave-one-out conditional missing masses, evaluated on
/// one shared set of test points.
OracleEstimate smoothed_oracle_H(const DistributionSpec& mu, const Sample& sample, Radius r,
                                 const OracleOptions& options = {});

/// Closed form of the expected missing mass for atomic distributions and the
/// uniform interval; none otherwise.
std::optional<double> analytic_expected_missing_mass(const DistributionSpec& mu, std::size_t n, Radius r);

/// E over n-samples of the conditional missing mass: the closed form when one
/// exists, else the mean over `replicates` fresh samples of the conditional
/// oracle.
OracleEstimate expected_missing_mass(const DistributionSpec& mu, std::size_t n, Radius r, std::size_t replicates,
                                     const OracleOptions& options = {});

/// Integral of |F_mu - F_sample| over the line, computed piecewise exactly.
/// Needs a 1-D euclidean sample and a uniform_interval or real_atoms mu;
/// throws UnsupportedError otherwise.
double exact_wasserstein_1d(const DistributionSpec& mu, const Sample& sample);

/// Throws DimensionError unless the sample lives in mu's natural space.
void require_compatible(const DistributionSpec& mu, const Sample& sample);

} // namespace missmass
