#include "missmass/oracles.hpp"

#include "missmass/errors.hpp"
#include "missmass/stats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace missmass {

std::string to_string(OracleMethod method) {
    return method == OracleMethod::analytic ? "analytic" : "monte_carlo";
}

namespace {

// Mass of {y : no sample ball covers y} and of {y : exactly one does}.
struct CoverageMasses {
    double none = 0.0;
    double single = 0.0;
};

bool is_line(const MetricSpace& space) {
    return (space.kind() == MetricKind::euclidean || space.kind() == MetricKind::lp) && space.point_width() == 1;
}

std::vector<double> sorted_coordinates(const Sample& sample) {
    std::vector<double> xs(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) xs[i] = sample.point(i)[0];
    std::sort(xs.begin(), xs.end());
    return xs;
}

std::size_t count_in(const std::vector<double>& sorted, double lo, double hi) {
    auto first = std::lower_bound(sorted.begin(), sorted.end(), lo);
    auto last = std::upper_bound(sorted.begin(), sorted.end(), hi);
    return last > first ? static_cast<std::size_t>(last - first) : 0;
}

// Sweep over the union of intervals [x - w, x + w]; measure(lo, hi) is the
// mu-mass of [lo, hi].
CoverageMasses sweep_intervals(const std::vector<double>& sorted, double w,
                               const std::function<double(double, double)>& measure) {
    std::vector<std::pair<double, int>> events;
    events.reserve(2 * sorted.size());
    for (double x : sorted) {
        events.emplace_back(x - w, +1);
        events.emplace_back(x + w, -1);
    }
    std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
        return a.first < b.first || (a.first == b.first && a.second > b.second);
    });
    CoverageMasses out;
    const double inf = std::numeric_limits<double>::infinity();
    double position = -inf;
    int depth = 0;
    for (const auto& [x, delta] : events) {
        if (x > position) {
            const double mass = measure(position, x);
            if (depth == 0) out.none += mass;
            if (depth == 1) out.single += mass;
            position = x;
        }
        depth += delta;
    }
    out.none += measure(position, inf);
    return out;
}

// Coverage counts (capped at 2) of each atom of an atomic distribution.
template <class CountFn>
CoverageMasses atom_masses(const std::vector<double>& weights, CountFn&& count) {
    CoverageMasses out;
    for (std::size_t a = 0; a < weights.size(); ++a) {
        const std::size_t c = count(a);
        if (c == 0) out.none += weights[a];
        if (c == 1) out.single += weights[a];
    }
    return out;
}

std::optional<CoverageMasses> analytic_coverage(const DistributionSpec& mu, const Sample& sample, Radius r) {
    const double rv = r.value();
    const std::size_t n = sample.size();

    if (const auto* d = std::get_if<DiscreteDist>(&mu)) {
        std::vector<std::size_t> multiplicity(d->symbols.size(), 0);
        if (!sample.labels().empty()) {
            std::map<std::string, std::size_t> index;
            for (std::size_t a = 0; a < d->symbols.size(); ++a) index[d->symbols[a]] = a;
            for (const auto& label : sample.labels()) {
                auto it = index.find(label);
                if (it != index.end()) ++multiplicity[it->second];
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                const auto id = static_cast<std::size_t>(sample.point(i)[0]);
                if (id < multiplicity.size()) ++multiplicity[id];
            }
        }
        return atom_masses(d->weights, [&](std::size_t a) { return rv >= 1.0 ? n : multiplicity[a]; });
    }

    if (const auto* u = std::get_if<UniformInterval>(&mu)) {
        const double length = u->b - u->a;
        auto measure = [&](double lo, double hi) {
            const double l = std::clamp(lo, u->a, u->b);
            const double h = std::clamp(hi, u->a, u->b);
            return std::max(0.0, h - l) / length;
        };
        return sweep_intervals(sorted_coordinates(sample), rv, measure);
    }

    if (const auto* s = std::get_if<ScaledIndicatorDist>(&mu)) {
        const double rate = s->rate;
        auto cdf = [&](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-rate * x); };
        auto measure = [&](double lo, double hi) { return std::max(0.0, cdf(hi) - cdf(lo)); };
        return sweep_intervals(sorted_coordinates(sample), std::pow(rv, s->p), measure);
    }

    if (const auto* a = std::get_if<RealAtoms>(&mu)) {
        const auto xs = sorted_coordinates(sample);
        return atom_masses(a->weights, [&](std::size_t k) {
            return std::min<std::size_t>(2, count_in(xs, a->values[k] - rv, a->values[k] + rv));
        });
    }

    const SphereAtom* sphere = std::get_if<SphereAtom>(&mu);
    const BasisUniform* basis = std::get_if<BasisUniform>(&mu);
    if (sphere || basis) {
        const std::size_t dim = sphere ? sphere->dim : basis->dim;
        const double origin_weight = sphere ? sphere_atom_origin_weight(*sphere) : 0.0;
        const double basis_weight = (1.0 - origin_weight) / static_cast<double>(dim);
        const double limit = rv * rv;
        std::vector<std::size_t> counts(dim, 0);
        std::size_t origin_count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const PointView x = sample.point(i);
            double norm = 0.0;
            for (double v : x) norm += v * v;
            if (norm <= limit) ++origin_count;
            for (std::size_t j = 0; j < dim; ++j) {
                if (norm - 2.0 * x[j] + 1.0 <= limit) ++counts[j];
            }
        }
        CoverageMasses out;
        auto add = [&](std::size_t c, double w) {
            if (c == 0) out.none += w;
            if (c == 1) out.single += w;
        };
        if (sphere) add(origin_count, origin_weight);
        for (std::size_t j = 0; j < dim; ++j) add(counts[j], basis_weight);
        return out;
    }
    return std::nullopt;
}

// Monte Carlo coverage: fractions of test points covered by no ball and by
// exactly one ball.
CoverageMasses monte_carlo_coverage(const DistributionSpec& mu, const Sample& sample, Radius r,
                                    const OracleOptions& options) {
    if (options.test_points < 1) throw ArgumentError("test point count must be at least 1");
    PointSampler sampler(mu);
    Rng rng = Rng::stream(options.seed, 0);
    const MetricSpace& space = sample.space();
    const double rv = r.value();
    const std::size_t n = sample.size();
    std::vector<double> y(sampler.width());

    const bool line = is_line(space) || space.kind() == MetricKind::scaled_indicator;
    const double reach = space.kind() == MetricKind::scaled_indicator ? std::pow(rv, space.exponent()) : rv;
    const std::vector<double> xs = line ? sorted_coordinates(sample) : std::vector<double>{};

    std::size_t none = 0;
    std::size_t single = 0;
    for (std::size_t t = 0; t < options.test_points; ++t) {
        sampler.draw_into(rng, y.data());
        std::size_t c = 0;
        if (line) {
            c = std::min<std::size_t>(2, count_in(xs, y[0] - reach, y[0] + reach));
        } else {
            for (std::size_t i = 0; i < n && c < 2; ++i) {
                if (sample.distance_to(i, y) <= rv) ++c;
            }
        }
        none += c == 0 ? 1 : 0;
        single += c == 1 ? 1 : 0;
    }
    const double total = static_cast<double>(options.test_points);
    return {static_cast<double>(none) / total, static_cast<double>(single) / total};
}

OracleEstimate finish(double value, bool analytic, const OracleOptions& options) {
    OracleEstimate e;
    e.value = std::clamp(value, 0.0, 1.0);
    e.seed = options.seed;
    if (analytic) {
        e.method = OracleMethod::analytic;
        e.confidence = 1.0;
    } else {
        e.method = OracleMethod::monte_carlo;
        e.draws = options.test_points;
        e.half_width = hoeffding_half_width(options.test_points, options.alpha);
        e.confidence = 1.0 - options.alpha;
    }
    return e;
}

std::pair<CoverageMasses, bool> coverage(const DistributionSpec& mu, const Sample& sample, Radius r,
                                         const OracleOptions& options) {
    validate(mu);
    require_compatible(mu, sample);
    if (sample.empty()) throw ArgumentError("oracle needs a non-empty sample");
    if (!options.force_monte_carlo) {
        if (auto masses = analytic_coverage(mu, sample, r)) return {*masses, true};
    }
    return {monte_carlo_coverage(mu, sample, r, options), false};
}

} // namespace

void require_compatible(const DistributionSpec& mu, const Sample& sample) {
    const MetricSpace expected = natural_space(mu);
    const MetricSpace& actual = sample.space();
    const bool same_kind = expected.kind() == actual.kind() ||
                           (is_line(expected) && is_line(actual));
    if (!same_kind || expected.point_width() != actual.point_width()) {
        throw DimensionError("sample space " + actual.describe() + " does not match distribution space " +
                             expected.describe());
    }
    if (expected.kind() == MetricKind::scaled_indicator && expected.exponent() != actual.exponent()) {
        throw DimensionError("scaled-indicator exponent differs between sample and distribution");
    }
}

OracleEstimate conditional_missing_mass(const DistributionSpec& mu, const Sample& sample, Radius r,
                                        const OracleOptions& options) {
    auto [masses, analytic] = coverage(mu, sample, r, options);
    return finish(masses.none, analytic, options);
}

OracleEstimate smoothed_oracle_H(const DistributionSpec& mu, const Sample& sample, Radius r,
                                 const OracleOptions& options) {
    auto [masses, analytic] = coverage(mu, sample, r, options);
    return finish(masses.none + masses.single / static_cast<double>(sample.size()), analytic, options);
}

std::optional<double> analytic_expected_missing_mass(const DistributionSpec& mu, std::size_t n, Radius r) {
    if (n < 1) throw ArgumentError("n must be at least 1");
    validate(mu);
    const double rv = r.value();
    const double nd = static_cast<double>(n);

    if (const auto* d = std::get_if<DiscreteDist>(&mu)) {
        if (rv >= 1.0) return 0.0;
        double total = 0.0;
        for (double p : d->weights) total += p * std::pow(1.0 - p, nd);
        return total;
    }
    if (const auto* a = std::get_if<RealAtoms>(&mu)) {
        double total = 0.0;
        for (std::size_t i = 0; i < a->values.size(); ++i) {
            double ball = 0.0;
            for (std::size_t j = 0; j < a->values.size(); ++j) {
                if (std::abs(a->values[i] - a->values[j]) <= rv) ball += a->weights[j];
            }
            total += a->weights[i] * std::pow(std::max(0.0, 1.0 - ball), nd);
        }
        return total;
    }
    if (const auto* u = std::get_if<UniformInterval>(&mu)) {
        const double s = rv / (u->b - u->a);
        if (s >= 1.0) return 0.0;
        const double outer = std::pow(1.0 - s, nd + 1.0);
        if (s <= 0.5) {
            const double inner = std::pow(1.0 - 2.0 * s, nd + 1.0);
            return inner + 2.0 * (outer - inner) / (nd + 1.0);
        }
        return 2.0 * outer / (nd + 1.0);
    }
    const SphereAtom* sphere = std::get_if<SphereAtom>(&mu);
    const BasisUniform* basis = std::get_if<BasisUniform>(&mu);
    if (sphere || basis) {
        const std::size_t dim = sphere ? sphere->dim : basis->dim;
        const double origin = sphere ? sphere_atom_origin_weight(*sphere) : 0.0;
        const double w = (1.0 - origin) / static_cast<double>(dim);
        const bool unit = rv >= 1.0;
        const bool diagonal = rv >= std::sqrt(2.0);
        const double origin_ball = origin + (unit ? 1.0 - origin : 0.0);
        const double basis_ball = w + (unit ? origin : 0.0) + (diagonal ? (1.0 - origin - w) : 0.0);
        double total = static_cast<double>(dim) * w * std::pow(std::max(0.0, 1.0 - basis_ball), nd);
        if (origin > 0.0) total += origin * std::pow(std::max(0.0, 1.0 - origin_ball), nd);
        return total;
    }
    return std::nullopt;
}

OracleEstimate expected_missing_mass(const DistributionSpec& mu, std::size_t n, Radius r, std::size_t replicates,
                                     const OracleOptions& options) {
    if (replicates < 1) throw ArgumentError("replicates must be at least 1");
    if (!options.force_monte_carlo) {
        if (auto value = analytic_expected_missing_mass(mu, n, r)) return finish(*value, true, options);
    }
    double total = 0.0;
    double inner_width = 0.0;
    for (std::size_t rep = 0; rep < replicates; ++rep) {
        Rng rng = Rng::stream(options.seed, 2 * rep + 1);
        const Sample sample = draw_sample(mu, n, rng);
        OracleOptions inner = options;
        inner.seed = splitmix64(options.seed, 2 * rep + 2);
        const OracleEstimate m = conditional_missing_mass(mu, sample, r, inner);
        total += m.value;
        inner_width = std::max(inner_width, m.half_width);
    }
    OracleEstimate e;
    e.value = total / static_cast<double>(replicates);
    e.method = OracleMethod::monte_carlo;
    e.draws = replicates;
    e.half_width = hoeffding_half_width(replicates, options.alpha) + inner_width;
    e.confidence = 1.0 - options.alpha;
    e.seed = options.seed;
    return e;
}

double exact_wasserstein_1d(const DistributionSpec& mu, const Sample& sample) {
    if (!is_line(sample.space())) throw UnsupportedError("exact W1 needs a one-dimensional euclidean sample");
    if (sample.empty()) throw ArgumentError("exact W1 of an empty sample");
    validate(mu);

    std::vector<double> breaks = sorted_coordinates(sample);
    const std::vector<double> xs = breaks;
    std::function<double(double)> cdf;
    if (const auto* u = std::get_if<UniformInterval>(&mu)) {
        breaks.push_back(u->a);
        breaks.push_back(u->b);
        cdf = [u](double x) { return std::clamp((x - u->a) / (u->b - u->a), 0.0, 1.0); };
    } else if (const auto* a = std::get_if<RealAtoms>(&mu)) {
        breaks.insert(breaks.end(), a->values.begin(), a->values.end());
        cdf = [a](double x) {
            double total = 0.0;
            for (std::size_t i = 0; i < a->values.size(); ++i) {
                if (a->values[i] <= x) total += a->weights[i];
            }
            return total;
        };
    } else {
        throw UnsupportedError("exact W1 needs a uniform_interval or real_atoms distribution");
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    const double n = static_cast<double>(xs.size());
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const double lo = breaks[k];
        const double hi = breaks[k + 1];
        const double empirical =
            static_cast<double>(std::upper_bound(xs.begin(), xs.end(), lo) - xs.begin()) / n;
        // F_mu is affine on [lo, hi) for both supported kinds; evaluate the
        // left end from inside the piece so atoms at hi are excluded.
        const double g_lo = cdf(lo) - empirical;
        const double g_hi = (std::holds_alternative<RealAtoms>(mu) ? cdf(lo) : cdf(hi)) - empirical;
        const double len = hi - lo;
        if ((g_lo >= 0.0) == (g_hi >= 0.0)) {
            total += 0.5 * (std::abs(g_lo) + std::abs(g_hi)) * len;
        } else {
            total += len * (g_lo * g_lo + g_hi * g_hi) / (2.0 * (std::abs(g_lo) + std::abs(g_hi)));
        }
    }
    return total;
}

} // namespace missmass
