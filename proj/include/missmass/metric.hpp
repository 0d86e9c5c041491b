#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace missmass {

/// A point of a universe. Vectors use one coordinate per dimension; symbols,
/// precomputed-matrix indices and scaled-indicator scalars use one coordinate.
using Point = std::vector<double>;
using PointView = std::span<const double>;

/// Closed-ball radius, in the units of the distortion. Always non-negative.
class Radius {
public:
    constexpr Radius() = default;
    explicit Radius(double value);

    constexpr double value() const noexcept { return value_; }
    friend constexpr bool operator==(Radius, Radius) = default;
    friend constexpr auto operator<=>(Radius a, Radius b) { return a.value_ <=> b.value_; }

private:
    double value_ = 0.0;
};

/// Square, symmetric, zero-diagonal, non-negative matrix stored row-major.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    /// Validates shape and the distortion axioms; throws ArgumentError.
    static DistanceMatrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

    /// Sets both (i,j) and (j,i).
    void set(std::size_t i, std::size_t j, double value) noexcept {
        data_[i * n_ + j] = value;
        data_[j * n_ + i] = value;
    }

    std::span<const double> row(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }
    const std::vector<double>& data() const noexcept { return data_; }

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

enum class MetricKind { euclidean, lp, discrete, precomputed, scaled_indicator };

std::string to_string(MetricKind kind);
MetricKind metric_kind_from_string(const std::string& name);

/// A symmetric distortion function over a concrete point universe.
///
/// Copies are cheap: a precomputed matrix is shared between copies.
class MetricSpace {
public:
    static MetricSpace euclidean(std::size_t dim);
    static MetricSpace lp(std::size_t dim, double p);
    static MetricSpace discrete();
    static MetricSpace precomputed(DistanceMatrix matrix);
    /// Points are reals a >= 0 with d(a,b) = |a-b|^(1/p): the L_p distance
    /// between the indicator functions of [0,a] and [0,b].
    static MetricSpace scaled_indicator(double p);

    MetricKind kind() const noexcept { return kind_; }
    /// Declared dimension for vector kinds, 1 for scaled-indicator, none otherwise.
    std::optional<std::size_t> dimension() const noexcept;
    /// Exponent p of lp and scaled-indicator kinds; 2 for euclidean.
    double exponent() const noexcept { return p_; }
    /// Number of coordinates every point of this space carries.
    std::size_t point_width() const noexcept;
    const DistanceMatrix* matrix() const noexcept { return matrix_.get(); }

    /// Throws DimensionError if the point does not belong to the space.
    void validate(PointView point) const;

    /// Unchecked distortion; callers validate points at ingestion.
    double distance(PointView a, PointView b) const noexcept;

    std::string describe() const;

private:
    MetricSpace(MetricKind kind, std::size_t dim, double p) : kind_(kind), dim_(dim), p_(p) {}

    MetricKind kind_ = MetricKind::euclidean;
    std::size_t dim_ = 1;
    double p_ = 2.0;
    std::shared_ptr<const DistanceMatrix> matrix_;
};

/// d(center, y) <= r; the ball is closed.
bool ball_contains(const MetricSpace& space, PointView center, Radius r, PointView y);

} // namespace missmass
