#include "missmass/metric.hpp"

#include "missmass/errors.hpp"

#include <cmath>
#include <sstream>

namespace missmass {

Radius::Radius(double value) : value_(value) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
        throw ArgumentError("radius must be a finite non-negative real");
    }
}

DistanceMatrix DistanceMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    DistanceMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw ArgumentError("distance matrix is not square: row " + std::to_string(i) + " has " +
                                std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i][i] != 0.0) {
            throw ArgumentError("distance matrix has a non-zero diagonal entry at " + std::to_string(i));
        }
        for (std::size_t j = 0; j < n; ++j) {
            const double v = rows[i][j];
            if (!(v >= 0.0) || !std::isfinite(v)) {
                throw ArgumentError("distance matrix entry is negative or not finite");
            }
            if (v != rows[j][i]) {
                throw ArgumentError("distance matrix is not symmetric at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
            }
            m.data_[i * n + j] = v;
        }
    }
    return m;
}

std::string to_string(MetricKind kind) {
    switch (kind) {
    case MetricKind::euclidean: return "euclidean";
    case MetricKind::lp: return "lp";
    case MetricKind::discrete: return "discrete";
    case MetricKind::precomputed: return "precomputed";
    case MetricKind::scaled_indicator: return "scaled_indicator";
    }
    return "unknown";
}

MetricKind metric_kind_from_string(const std::string& name) {
    if (name == "euclidean") return MetricKind::euclidean;
    if (name == "lp") return MetricKind::lp;
    if (name == "discrete") return MetricKind::discrete;
    if (name == "precomputed") return MetricKind::precomputed;
    if (name == "scaled_indicator" || name == "scaled-indicator") return MetricKind::scaled_indicator;
    throw ArgumentError("unknown metric kind '" + name + "'");
}

MetricSpace MetricSpace::euclidean(std::size_t dim) {
    if (dim == 0) throw ArgumentError("euclidean dimension must be positive");
    return MetricSpace(MetricKind::euclidean, dim, 2.0);
}

MetricSpace MetricSpace::lp(std::size_t dim, double p) {
    if (dim == 0) throw ArgumentError("lp dimension must be positive");
    if (!(p >= 1.0) || !std::isfinite(p)) throw ArgumentError("lp exponent must be a finite real >= 1");
    return MetricSpace(MetricKind::lp, dim, p);
}

MetricSpace MetricSpace::discrete() { return MetricSpace(MetricKind::discrete, 1, 2.0); }

MetricSpace MetricSpace::precomputed(DistanceMatrix matrix) {
    MetricSpace space(MetricKind::precomputed, 1, 2.0);
    space.matrix_ = std::make_shared<const DistanceMatrix>(std::move(matrix));
    return space;
}

MetricSpace MetricSpace::scaled_indicator(double p) {
    if (!(p > 0.0) || !std::isfinite(p)) throw ArgumentError("scaled-indicator exponent must be positive");
    return MetricSpace(MetricKind::scaled_indicator, 1, p);
}

std::optional<std::size_t> MetricSpace::dimension() const noexcept {
    switch (kind_) {
    case MetricKind::euclidean:
    case MetricKind::lp: return dim_;
    case MetricKind::scaled_indicator: return 1;
    default: return std::nullopt;
    }
}

std::size_t MetricSpace::point_width() const noexcept {
    return (kind_ == MetricKind::euclidean || kind_ == MetricKind::lp) ? dim_ : 1;
}

void MetricSpace::validate(PointView point) const {
    if (point.size() != point_width()) {
        throw DimensionError("point has " + std::to_string(point.size()) + " coordinates but " + describe() +
                             " expects " + std::to_string(point_width()));
    }
    for (double c : point) {
        if (!std::isfinite(c)) throw DimensionError("point coordinate is not finite");
    }
    if (kind_ == MetricKind::precomputed) {
        const double idx = point[0];
        if (idx < 0 || idx != std::floor(idx) || idx >= static_cast<double>(matrix_->size())) {
            throw DimensionError("precomputed point index out of range");
        }
    }
    if (kind_ == MetricKind::scaled_indicator && point[0] < 0) {
        throw DimensionError("scaled-indicator points must be non-negative");
    }
}

double MetricSpace::distance(PointView a, PointView b) const noexcept {
    switch (kind_) {
    case MetricKind::euclidean: {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double d = a[i] - b[i];
            s += d * d;
        }
        return std::sqrt(s);
    }
    case MetricKind::lp: {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) s += std::pow(std::abs(a[i] - b[i]), p_);
        return std::pow(s, 1.0 / p_);
    }
    case MetricKind::discrete: return a[0] == b[0] ? 0.0 : 1.0;
    case MetricKind::precomputed:
        return (*matrix_)(static_cast<std::size_t>(a[0]), static_cast<std::size_t>(b[0]));
    case MetricKind::scaled_indicator: return std::pow(std::abs(a[0] - b[0]), 1.0 / p_);
    }
    return 0.0;
}

std::string MetricSpace::describe() const {
    std::ostringstream os;
    switch (kind_) {
    case MetricKind::euclidean: os << "euclidean(" << dim_ << ")"; break;
    case MetricKind::lp: os << "lp(" << dim_ << ", p=" << p_ << ")"; break;
    case MetricKind::discrete: os << "discrete"; break;
    case MetricKind::precomputed: os << "precomputed(" << matrix_->size() << ")"; break;
    case MetricKind::scaled_indicator: os << "scaled_indicator(p=" << p_ << ")"; break;
    }
    return os.str();
}

bool ball_contains(const MetricSpace& space, PointView center, Radius r, PointView y) {
    space.validate(center);
    space.validate(y);
    return space.distance(center, y) <= r.value();
}

} // namespace missmass
