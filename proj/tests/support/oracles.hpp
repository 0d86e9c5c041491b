#pragma once

// Reference implementations used only by the tests. They follow the
// definitions directly and share no code with the library algorithms they
// check.

#include "missmass/distributions.hpp"
#include "missmass/sample.hpp"

#include <cstddef>
#include <vector>

namespace reference {

using missmass::Point;

/// Euclidean distance written out directly.
double euclid(const Point& a, const Point& b);

/// Result of a grid search for a centre covering a point set within r.
struct GridLocality {
    /// Some grid point has max distance <= r.
    bool strict = false;
    /// Some finest-level grid point has max distance <= r + half diagonal of a cell.
    bool loose = false;
};

/// Branch and bound over a box of half side r around the first point,
/// refining cells until their side is at most r/100.
GridLocality grid_locality(const std::vector<Point>& points, double r);

/// Largest r-separated subset passing the strict and the loose grid test.
struct GridH {
    std::size_t strict = 0;
    std::size_t loose = 0;
};
GridH grid_h(const std::vector<Point>& points, double r);

/// Maximum clique of the graph with edges r < d <= 2r, by enumerating all subsets.
std::size_t brute_clique(const std::vector<std::vector<double>>& dist, double r);

/// Good-Turing fraction straight from the definition.
double naive_good_turing(const std::vector<std::vector<double>>& dist, double r);

/// T_m straight from the definition (1-based k, strictly earlier points).
double naive_martingale(const std::vector<std::vector<double>>& dist, double r, std::size_t m);

/// min over m of T_m + sqrt(ln(n/delta)/(2m)), clipped to 1, with the arg min.
struct ScanResult {
    double value = 0.0;
    std::size_t m = 0;
};
ScanResult scripted_scan(const std::vector<std::vector<double>>& dist, double r, double delta);

/// W1 through the quantile representation: integral over u of
/// |F_mu^{-1}(u) - F_n^{-1}(u)|, exact for uniform intervals and atoms.
double quantile_w1(const missmass::DistributionSpec& mu, std::vector<double> sample);

/// Expected missing mass of a discrete distribution under the discrete
/// metric with r < 1, by enumerating all k^n samples.
double enumerated_expected_missing_mass(const std::vector<double>& weights, std::size_t n);

/// Pairwise distance table of a sample computed through the space.
std::vector<std::vector<double>> distance_table(const missmass::Sample& sample);

} // namespace reference
