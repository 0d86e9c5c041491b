#include "missmass/sample.hpp"

#include "missmass/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace missmass {

Sample::Sample(MetricSpace space, const std::vector<Point>& points, SampleOptions options)
    : Sample(std::move(space), points, {}, options) {}

Sample::Sample(MetricSpace space, const std::vector<Point>& points, std::vector<std::string> labels,
               SampleOptions options)
    : space_(std::move(space)), n_(points.size()), width_(space_.point_width()), labels_(std::move(labels)),
      options_(options) {
    if (!labels_.empty() && labels_.size() != n_) {
        throw ArgumentError("label count does not match point count");
    }
    coords_.reserve(n_ * width_);
    for (const auto& p : points) {
        space_.validate(p);
        coords_.insert(coords_.end(), p.begin(), p.end());
    }
    if (n_ <= options_.cache_cap) cache_ = compute_distances();
}

Point Sample::point_copy(std::size_t i) const {
    auto v = point(i);
    return Point(v.begin(), v.end());
}

DistanceMatrix Sample::compute_distances() const {
    DistanceMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) m.set(i, j, space_.distance(point(i), point(j)));
    }
    return m;
}

std::vector<Point> Sample::points() const {
    std::vector<Point> out;
    out.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) out.push_back(point_copy(i));
    return out;
}

Sample Sample::prefix(std::size_t count) const {
    if (count > n_) throw ArgumentError("prefix longer than sample");
    IndexList idx(count);
    for (std::size_t i = 0; i < count; ++i) idx[i] = i;
    return select(idx);
}

Sample Sample::select(std::span<const std::size_t> indices) const {
    std::vector<Point> pts;
    std::vector<std::string> labels;
    pts.reserve(indices.size());
    for (std::size_t i : indices) {
        if (i >= n_) throw ArgumentError("sample index out of range");
        pts.push_back(point_copy(i));
        if (!labels_.empty()) labels.push_back(labels_[i]);
    }
    return Sample(space_, pts, std::move(labels), options_);
}

namespace {

void check_indices(const Sample& sample, std::span<const std::size_t> indices) {
    std::vector<char> seen(sample.size(), 0);
    for (std::size_t i : indices) {
        if (i >= sample.size()) throw ArgumentError("index " + std::to_string(i) + " out of range");
        if (seen[i]) throw ArgumentError("duplicate index " + std::to_string(i));
        seen[i] = 1;
    }
}

} // namespace

bool is_r_separated(const Sample& sample, std::span<const std::size_t> indices, Radius r) {
    check_indices(sample, indices);
    for (std::size_t a = 0; a < indices.size(); ++a) {
        for (std::size_t b = a + 1; b < indices.size(); ++b) {
            if (!(sample.distance(indices[a], indices[b]) > r.value())) return false;
        }
    }
    return true;
}

IndexList farthest_first_net(const Sample& sample, Radius r, std::size_t seed_index) {
    const std::size_t n = sample.size();
    if (n == 0) throw ArgumentError("farthest-first traversal needs a non-empty sample");
    if (seed_index >= n) throw ArgumentError("seed index out of range");

    IndexList net{seed_index};
    std::vector<double> gap(n);
    for (std::size_t i = 0; i < n; ++i) gap[i] = sample.distance(seed_index, i);

    for (;;) {
        std::size_t far = 0;
        double far_gap = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (gap[i] > far_gap) {
                far_gap = gap[i];
                far = i;
            }
        }
        if (far_gap <= r.value()) break;
        net.push_back(far);
        for (std::size_t i = 0; i < n; ++i) gap[i] = std::min(gap[i], sample.distance(far, i));
    }
    return net;
}

bool is_r_net(const Sample& sample, std::span<const std::size_t> net, Radius r) {
    if (net.empty() || !is_r_separated(sample, net, r)) return false;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        bool covered = false;
        for (std::size_t y : net) {
            if (sample.distance(i, y) <= r.value()) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

void require_r_net(const Sample& sample, std::span<const std::size_t> net, Radius r) {
    if (net.empty()) throw InvalidNetError("net is empty");
    for (std::size_t i : net) {
        if (i >= sample.size()) throw InvalidNetError("net index out of range");
    }
    bool separated = false;
    try {
        separated = is_r_separated(sample, net, r);
    } catch (const ArgumentError& e) {
        throw InvalidNetError(std::string("net indices invalid: ") + e.what());
    }
    if (!separated) throw InvalidNetError("net is not r-separated");
    if (!is_r_net(sample, net, r)) throw InvalidNetError("net does not cover every sample point within r");
}

double sample_diameter(const Sample& sample) {
    double diam = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        for (std::size_t j = i + 1; j < sample.size(); ++j) diam = std::max(diam, sample.distance(i, j));
    }
    return diam;
}

std::size_t nearest_index(const Sample& sample, PointView y) {
    if (sample.empty()) throw ArgumentError("nearest neighbour of an empty sample");
    sample.space().validate(y);
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double d = sample.distance_to(i, y);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

double pairwise_distance_quantile(const Sample& sample, double q) {
    if (!(q >= 0.0 && q <= 1.0)) throw ArgumentError("quantile level must lie in [0,1]");
    const std::size_t n = sample.size();
    if (n < 2) throw ArgumentError("pairwise distance quantile needs at least two points");
    std::vector<double> d;
    d.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) d.push_back(sample.distance(i, j));
    }
    const auto k = static_cast<std::size_t>(std::floor(q * static_cast<double>(d.size() - 1)));
    std::nth_element(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(k), d.end());
    return d[k];
}

} // namespace missmass
