#pragma once

#include "missmass/metric.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace missmass {

using IndexList = std::vector<std::size_t>;

struct SampleOptions {
    /// Pairwise distances are cached eagerly when n does not exceed this cap.
    std::size_t cache_cap = 4096;
};

/// An ordered sample X_1..X_n of points in a metric space.
///
/// Order is kept exactly as ingested; the martingale estimators depend on it.
/// A sample is immutable once constructed and safe to share between threads.
class Sample {
public:
    Sample(MetricSpace space, const std::vector<Point>& points, SampleOptions options = {});
    /// Labels name the points (symbols for discrete samples); they are carried
    /// through for reporting only.
    Sample(MetricSpace space, const std::vector<Point>& points, std::vector<std::string> labels,
           SampleOptions options = {});

    std::size_t size() const noexcept { return n_; }
    bool empty() const noexcept { return n_ == 0; }
    const MetricSpace& space() const noexcept { return space_; }
    PointView point(std::size_t i) const noexcept { return {coords_.data() + i * width_, width_}; }
    Point point_copy(std::size_t i) const;
    std::size_t width() const noexcept { return width_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const SampleOptions& options() const noexcept { return options_; }

    double distance(std::size_t i, std::size_t j) const noexcept {
        return cache_ ? (*cache_)(i, j) : space_.distance(point(i), point(j));
    }
    double distance_to(std::size_t i, PointView y) const noexcept { return space_.distance(point(i), y); }

    bool has_cache() const noexcept { return cache_.has_value(); }
    /// Cached matrix, or nullptr when n exceeds the cache cap.
    const DistanceMatrix* cache() const noexcept { return cache_ ? &*cache_ : nullptr; }
    /// Recomputes every pairwise distance from the space.
    DistanceMatrix compute_distances() const;

    /// The first count points, in order.
    Sample prefix(std::size_t count) const;
    /// Points at the given indices, in the given order (duplicates allowed).
    Sample select(std::span<const std::size_t> indices) const;
    std::vector<Point> points() const;

private:
    MetricSpace space_;
    std::size_t n_ = 0;
    std::size_t width_ = 0;
    std::vector<double> coords_;
    std::vector<std::string> labels_;
    SampleOptions options_;
    std::optional<DistanceMatrix> cache_;
};

/// True iff every distinct pair of the sub-sample has d > r.
/// Throws ArgumentError on duplicate or out-of-range indices.
bool is_r_separated(const Sample& sample, std::span<const std::size_t> indices, Radius r);

/// Greedy farthest-first traversal. Starts at seed_index and keeps adding the
/// sample point farthest from the current net (lowest index on ties) until
/// that distance is <= r. The result is a maximal r-separated subset.
IndexList farthest_first_net(const Sample& sample, Radius r, std::size_t seed_index = 0);

/// True iff the indices form an r-separated set covering every sample point
/// within r.
bool is_r_net(const Sample& sample, std::span<const std::size_t> net, Radius r);

/// Throws InvalidNetError naming the failed condition.
void require_r_net(const Sample& sample, std::span<const std::size_t> net, Radius r);

double sample_diameter(const Sample& sample);

/// Index of the nearest sample point to y; lowest index wins ties.
std::size_t nearest_index(const Sample& sample, PointView y);

/// Lower q-quantile (q in [0,1]) of the pairwise distances of distinct pairs.
double pairwise_distance_quantile(const Sample& sample, double q);

} // namespace missmass
