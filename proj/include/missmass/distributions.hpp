#pragma once

#include "missmass/metric.hpp"
#include "missmass/rng.hpp"
#include "missmass/sample.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace missmass {

/// Finite distribution over symbols under the discrete metric.
struct DiscreteDist {
    std::vector<std::string> symbols;
    std::vector<double> weights;
};

struct UniformInterval {
    double a = 0.0;
    double b = 1.0;
};

/// Finite distribution over points of the real line.
struct RealAtoms {
    std::vector<double> values;
    std::vector<double> weights;
};

/// Basis vectors e_1..e_D of R^D, each with mass (1/2)^(1/n_design)/D, plus
/// an atom at the origin carrying the remaining 1 - (1/2)^(1/n_design).
/// With 1 < r < sqrt(2), a sample of size n_design misses the origin with
/// probability exactly 1/2.
struct SphereAtom {
    std::size_t dim = 1;
    std::size_t n_design = 1;
    double r_design = 1.2;
};

/// Uniform over the basis vectors of R^D.
struct BasisUniform {
    std::size_t dim = 1;
};

/// Exponential(rate) reals under the scaled-indicator(p) metric.
struct ScaledIndicatorDist {
    double p = 2.0;
    double rate = 1.0;
};

/// Uniform on [0,1]^intrinsic placed in the first coordinates of R^ambient.
struct LowdimEmbedding {
    std::size_t intrinsic = 1;
    std::size_t ambient = 1;
};

/// Isotropic Gaussian mixture in R^D.
struct GaussianMixture {
    std::vector<Point> means;
    std::vector<double> weights;
    double sigma = 1.0;
};

using DistributionSpec = std::variant<DiscreteDist, UniformInterval, RealAtoms, SphereAtom, BasisUniform,
                                      ScaledIndicatorDist, LowdimEmbedding, GaussianMixture>;

/// Name of the alternative held by the spec ("discrete", "uniform_interval", ...).
std::string kind_name(const DistributionSpec& spec);

/// Throws ArgumentError if the spec is malformed (weights not summing to 1,
/// empty support, bad dimensions, ...).
void validate(const DistributionSpec& spec);

/// The metric space the distribution lives in.
MetricSpace natural_space(const DistributionSpec& spec);

/// Repeated draws from one validated spec, with weight tables prepared once.
class PointSampler {
public:
    explicit PointSampler(DistributionSpec spec);
    const DistributionSpec& spec() const noexcept { return spec_; }
    std::size_t width() const noexcept { return width_; }
    /// Writes one draw into out[0..width).
    void draw_into(Rng& rng, double* out) const;
    Point draw(Rng& rng) const;

private:
    DistributionSpec spec_;
    std::vector<double> cumulative_;
    std::size_t width_ = 1;
};

/// Draws one point.
Point draw_point(const DistributionSpec& spec, Rng& rng);

/// count iid points, deterministic in (spec, seed).
std::vector<Point> sample_points(const DistributionSpec& spec, std::size_t count, std::uint64_t seed);

/// Same draws packaged as a Sample in the natural space (discrete samples
/// carry their symbols as labels).
Sample draw_sample(const DistributionSpec& spec, std::size_t count, Rng& rng, SampleOptions options = {});
Sample draw_sample(const DistributionSpec& spec, std::size_t count, std::uint64_t seed, SampleOptions options = {});

/// Weights proportional to 1/i, i = 1..k, on symbols s1..sk.
DiscreteDist zipf(std::size_t k);
/// Equal weights on symbols s1..sk.
DiscreteDist discrete_uniform(std::size_t k);

/// Dimension chosen for the adversarial pair: start at ceil(2n/eps) and double
/// until n^2/(D-n) <= eps.
std::size_t adversarial_dimension(std::size_t n, double epsilon);

/// The pair (sphere_atom, basis_uniform) that agree on every sample without
/// the origin yet differ in expected missing mass. Requires eps in (0,1),
/// 1 < r < sqrt(2) and n >= ln(4)/eps.
std::pair<DistributionSpec, DistributionSpec> adversarial_pair(std::size_t n, double epsilon, double r);

/// Mass of the origin atom of a sphere_atom spec: 1 - (1/2)^(1/n_design).
double sphere_atom_origin_weight(const SphereAtom& spec);

/// count exponential(1) reals representing the indicators 1_[0,X] under the
/// scaled-indicator(p) metric.
std::vector<double> indicator_process(double p, std::size_t count, std::uint64_t seed);

} // namespace missmass
