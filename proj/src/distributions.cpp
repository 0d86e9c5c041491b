#include "missmass/distributions.hpp"

#include "missmass/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace missmass {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_weights(const std::vector<double>& weights, std::size_t expected, const char* what) {
    if (weights.empty()) throw ArgumentError(std::string(what) + ": empty support");
    if (weights.size() != expected) throw ArgumentError(std::string(what) + ": weight count does not match support");
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) throw ArgumentError(std::string(what) + ": weights must be non-negative");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) throw ArgumentError(std::string(what) + ": weights must sum to 1");
}

std::vector<double> cumulative(const std::vector<double>& weights) {
    std::vector<double> c(weights.size());
    std::partial_sum(weights.begin(), weights.end(), c.begin());
    return c;
}

} // namespace

std::string kind_name(const DistributionSpec& spec) {
    return std::visit(Overloaded{
                          [](const DiscreteDist&) { return std::string("discrete"); },
                          [](const UniformInterval&) { return std::string("uniform_interval"); },
                          [](const RealAtoms&) { return std::string("real_atoms"); },
                          [](const SphereAtom&) { return std::string("sphere_atom"); },
                          [](const BasisUniform&) { return std::string("basis_uniform"); },
                          [](const ScaledIndicatorDist&) { return std::string("scaled_indicator"); },
                          [](const LowdimEmbedding&) { return std::string("lowdim_embedding"); },
                          [](const GaussianMixture&) { return std::string("gaussian_mixture"); },
                      },
                      spec);
}

void validate(const DistributionSpec& spec) {
    std::visit(Overloaded{
                   [](const DiscreteDist& d) {
                       check_weights(d.weights, d.symbols.size(), "discrete");
                       std::vector<std::string> sorted = d.symbols;
                       std::sort(sorted.begin(), sorted.end());
                       if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                           throw ArgumentError("discrete: duplicate symbol");
                       }
                   },
                   [](const UniformInterval& u) {
                       if (!(u.a < u.b) || !std::isfinite(u.a) || !std::isfinite(u.b)) {
                           throw ArgumentError("uniform_interval: need finite a < b");
                       }
                   },
                   [](const RealAtoms& a) {
                       check_weights(a.weights, a.values.size(), "real_atoms");
                       for (double v : a.values) {
                           if (!std::isfinite(v)) throw ArgumentError("real_atoms: non-finite value");
                       }
                   },
                   [](const SphereAtom& s) {
                       if (s.dim < 1 || s.n_design < 1) throw ArgumentError("sphere_atom: dim and n_design must be >= 1");
                       if (!(s.r_design > 0.0)) throw ArgumentError("sphere_atom: r_design must be positive");
                   },
                   [](const BasisUniform& b) {
                       if (b.dim < 1) throw ArgumentError("basis_uniform: dim must be >= 1");
                   },
                   [](const ScaledIndicatorDist& s) {
                       if (!(s.p >= 1.0) || !std::isfinite(s.p)) throw ArgumentError("scaled_indicator: p must be >= 1");
                       if (!(s.rate > 0.0) || !std::isfinite(s.rate)) throw ArgumentError("scaled_indicator: rate must be positive");
                   },
                   [](const LowdimEmbedding& l) {
                       if (l.intrinsic < 1 || l.ambient < l.intrinsic) {
                           throw ArgumentError("lowdim_embedding: need 1 <= intrinsic <= ambient");
                       }
                   },
                   [](const GaussianMixture& g) {
                       check_weights(g.weights, g.means.size(), "gaussian_mixture");
                       const std::size_t dim = g.means.front().size();
                       if (dim == 0) throw ArgumentError("gaussian_mixture: empty mean");
                       for (const auto& m : g.means) {
                           if (m.size() != dim) throw ArgumentError("gaussian_mixture: means differ in dimension");
                       }
                       if (!(g.sigma >= 0.0) || !std::isfinite(g.sigma)) throw ArgumentError("gaussian_mixture: bad sigma");
                   },
               },
               spec);
}

MetricSpace natural_space(const DistributionSpec& spec) {
    return std::visit(Overloaded{
                          [](const DiscreteDist&) { return MetricSpace::discrete(); },
                          [](const UniformInterval&) { return MetricSpace::euclidean(1); },
                          [](const RealAtoms&) { return MetricSpace::euclidean(1); },
                          [](const SphereAtom& s) { return MetricSpace::euclidean(s.dim); },
                          [](const BasisUniform& b) { return MetricSpace::euclidean(b.dim); },
                          [](const ScaledIndicatorDist& s) { return MetricSpace::scaled_indicator(s.p); },
                          [](const LowdimEmbedding& l) { return MetricSpace::euclidean(l.ambient); },
                          [](const GaussianMixture& g) { return MetricSpace::euclidean(g.means.front().size()); },
                      },
                      spec);
}

double sphere_atom_origin_weight(const SphereAtom& spec) {
    return 1.0 - std::pow(0.5, 1.0 / static_cast<double>(spec.n_design));
}

PointSampler::PointSampler(DistributionSpec spec) : spec_(std::move(spec)) {
    validate(spec_);
    width_ = natural_space(spec_).point_width();
    if (const auto* d = std::get_if<DiscreteDist>(&spec_)) cumulative_ = cumulative(d->weights);
    if (const auto* a = std::get_if<RealAtoms>(&spec_)) cumulative_ = cumulative(a->weights);
    if (const auto* g = std::get_if<GaussianMixture>(&spec_)) cumulative_ = cumulative(g->weights);
}

void PointSampler::draw_into(Rng& rng, double* out) const {
    std::visit(Overloaded{
                   [&](const DiscreteDist&) { out[0] = static_cast<double>(rng.categorical(cumulative_)); },
                   [&](const UniformInterval& u) { out[0] = rng.uniform(u.a, u.b); },
                   [&](const RealAtoms& a) { out[0] = a.values[rng.categorical(cumulative_)]; },
                   [&](const SphereAtom& s) {
                       std::fill(out, out + s.dim, 0.0);
                       if (rng.uniform() >= sphere_atom_origin_weight(s)) out[rng.below(s.dim)] = 1.0;
                   },
                   [&](const BasisUniform& b) {
                       std::fill(out, out + b.dim, 0.0);
                       out[rng.below(b.dim)] = 1.0;
                   },
                   [&](const ScaledIndicatorDist& s) { out[0] = rng.exponential(s.rate); },
                   [&](const LowdimEmbedding& l) {
                       std::fill(out, out + l.ambient, 0.0);
                       for (std::size_t i = 0; i < l.intrinsic; ++i) out[i] = rng.uniform();
                   },
                   [&](const GaussianMixture& g) {
                       const auto& mean = g.means[rng.categorical(cumulative_)];
                       for (std::size_t i = 0; i < mean.size(); ++i) out[i] = mean[i] + g.sigma * rng.normal();
                   },
               },
               spec_);
}

Point PointSampler::draw(Rng& rng) const {
    Point x(width_);
    draw_into(rng, x.data());
    return x;
}

Point draw_point(const DistributionSpec& spec, Rng& rng) {
    return PointSampler(spec).draw(rng);
}

namespace {

std::vector<Point> draw_points(const DistributionSpec& spec, std::size_t count, Rng& rng) {
    if (count < 1) throw ArgumentError("sample size must be at least 1");
    PointSampler sampler(spec);
    std::vector<Point> points;
    points.reserve(count);
    for (std::size_t i = 0; i < count; ++i) points.push_back(sampler.draw(rng));
    return points;
}

} // namespace

std::vector<Point> sample_points(const DistributionSpec& spec, std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    return draw_points(spec, count, rng);
}

Sample draw_sample(const DistributionSpec& spec, std::size_t count, Rng& rng, SampleOptions options) {
    std::vector<Point> points = draw_points(spec, count, rng);
    if (const auto* d = std::get_if<DiscreteDist>(&spec)) {
        std::vector<std::string> labels;
        labels.reserve(count);
        for (const auto& p : points) labels.push_back(d->symbols[static_cast<std::size_t>(p[0])]);
        return Sample(natural_space(spec), points, std::move(labels), options);
    }
    return Sample(natural_space(spec), points, options);
}

Sample draw_sample(const DistributionSpec& spec, std::size_t count, std::uint64_t seed, SampleOptions options) {
    Rng rng(seed);
    return draw_sample(spec, count, rng, options);
}

DiscreteDist zipf(std::size_t k) {
    if (k < 1) throw ArgumentError("zipf needs k >= 1");
    DiscreteDist d;
    double total = 0.0;
    for (std::size_t i = 1; i <= k; ++i) total += 1.0 / static_cast<double>(i);
    for (std::size_t i = 1; i <= k; ++i) {
        d.symbols.push_back("s" + std::to_string(i));
        d.weights.push_back(1.0 / static_cast<double>(i) / total);
    }
    return d;
}

DiscreteDist discrete_uniform(std::size_t k) {
    if (k < 1) throw ArgumentError("discrete_uniform needs k >= 1");
    DiscreteDist d;
    for (std::size_t i = 1; i <= k; ++i) {
        d.symbols.push_back("s" + std::to_string(i));
        d.weights.push_back(1.0 / static_cast<double>(k));
    }
    return d;
}

std::size_t adversarial_dimension(std::size_t n, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw ArgumentError("epsilon must lie in (0,1)");
    if (n < 1) throw ArgumentError("n must be at least 1");
    const double nd = static_cast<double>(n);
    auto dim = static_cast<std::size_t>(std::ceil(2.0 * nd / epsilon));
    while (dim <= n || nd * nd / static_cast<double>(dim - n) > epsilon) dim *= 2;
    return dim;
}

std::pair<DistributionSpec, DistributionSpec> adversarial_pair(std::size_t n, double epsilon, double r) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw ArgumentError("epsilon must lie in (0,1)");
    if (!(r > 1.0 && r < std::sqrt(2.0))) throw ArgumentError("r must satisfy 1 < r < sqrt(2)");
    if (static_cast<double>(n) < std::log(4.0) / epsilon) throw ArgumentError("n must be at least ln(4)/epsilon");
    const std::size_t dim = adversarial_dimension(n, epsilon);
    return {SphereAtom{dim, n, r}, BasisUniform{dim}};
}

std::vector<double> indicator_process(double p, std::size_t count, std::uint64_t seed) {
    if (!(p > 1.0) || !std::isfinite(p)) throw ArgumentError("indicator process needs p > 1");
    if (count < 1) throw ArgumentError("count must be at least 1");
    Rng rng(seed);
    std::vector<double> values(count);
    for (double& v : values) v = rng.exponential(1.0);
    return values;
}

} // namespace missmass
