#include "missmass/separation.hpp"

#include "missmass/enclosing_ball.hpp"
#include "missmass/errors.hpp"
#include "missmass/estimators.hpp"
#include "missmass/max_clique.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace missmass {

std::string to_string(Certification c) {
    switch (c) {
    case Certification::exact: return "exact";
    case Certification::upper_bound: return "upper_bound";
    case Certification::lower_bound: return "lower_bound";
    }
    return "unknown";
}

std::string to_string(SeparationMethod m) {
    switch (m) {
    case SeparationMethod::brute_force: return "brute_force";
    case SeparationMethod::clique_relaxation: return "clique_relaxation";
    case SeparationMethod::packing_cap: return "packing_cap";
    }
    return "unknown";
}

namespace {

constexpr double kLocalTolerance = 1e-9;

bool euclidean_like(const MetricSpace& space) {
    if (space.kind() == MetricKind::euclidean) return true;
    return space.kind() == MetricKind::lp && (space.exponent() == 2.0 || space.dimension() == std::size_t{1});
}

// Tracks the set of admissible centres while a candidate subset grows one
// point at a time.
class Locality {
public:
    Locality(const Sample& sample, Radius r) : sample_(sample), r_(r.value()), limit_(r.value() * (1 + kLocalTolerance)) {
        const MetricSpace& space = sample.space();
        if (euclidean_like(space)) {
            mode_ = space.point_width() == 1 ? Mode::line : Mode::ball;
            max_support_ = space.point_width() + 1;
        } else if (space.kind() == MetricKind::scaled_indicator) {
            mode_ = Mode::line;
            half_width_ = std::pow(r_, space.exponent()) * (1 + kLocalTolerance);
        } else if (space.kind() == MetricKind::discrete) {
            mode_ = Mode::discrete;
        } else {
            mode_ = Mode::centres;
            build_cover(space);
        }
        if (mode_ == Mode::line && half_width_ < 0) half_width_ = limit_;
    }

    struct State {
        std::vector<std::size_t> members;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        std::vector<std::uint64_t> centres;
    };

    State empty() const {
        State s;
        if (mode_ == Mode::centres) {
            s.centres.assign(words_, ~std::uint64_t{0});
            if (centre_count_ % 64 != 0) s.centres.back() = (std::uint64_t{1} << (centre_count_ % 64)) - 1;
        }
        return s;
    }

    // Returns true and fills `out` when members + {v} is local.
    bool extend(const State& in, std::size_t v, State& out) const {
        out.members = in.members;
        out.members.push_back(v);
        switch (mode_) {
        case Mode::line: {
            const double x = sample_.point(v)[0];
            out.lo = std::min(in.lo, x);
            out.hi = std::max(in.hi, x);
            return out.hi - out.lo <= 2 * half_width_;
        }
        case Mode::discrete:
            return in.members.empty() || (r_ >= 1.0) || all_equal(out.members);
        case Mode::centres: {
            out.centres.resize(words_);
            bool any = false;
            for (std::size_t w = 0; w < words_; ++w) {
                out.centres[w] = in.centres[w] & cover_[v * words_ + w];
                any = any || out.centres[w] != 0;
            }
            return any;
        }
        case Mode::ball: return ball_fits(out.members);
        }
        return false;
    }

    bool ball_fits(const std::vector<std::size_t>& members) const {
        const std::size_t k = members.size();
        if (k <= 1) return true;
        std::vector<double> sq(k * k);
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) {
                const double d = sample_.distance(members[a], members[b]);
                sq[a * k + b] = d * d;
            }
        }
        return fits_in_ball(sq, k, r_, kLocalTolerance, max_support_);
    }

private:
    enum class Mode { line, ball, discrete, centres };

    bool all_equal(const std::vector<std::size_t>& members) const {
        for (std::size_t i = 1; i < members.size(); ++i) {
            if (sample_.distance(members[0], members[i]) != 0.0) return false;
        }
        return true;
    }

    void build_cover(const MetricSpace& space) {
        const std::size_t n = sample_.size();
        const DistanceMatrix* universe = space.kind() == MetricKind::precomputed ? space.matrix() : nullptr;
        centre_count_ = universe ? universe->size() : n;
        words_ = std::max<std::size_t>(1, (centre_count_ + 63) / 64);
        cover_.assign(n * words_, 0);
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t c = 0; c < centre_count_; ++c) {
                double d = 0.0;
                if (universe) {
                    d = (*universe)(static_cast<std::size_t>(sample_.point(v)[0]), c);
                } else {
                    d = sample_.distance(v, c);
                }
                if (d <= limit_) cover_[v * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
            }
        }
    }

    const Sample& sample_;
    double r_;
    double limit_;
    double half_width_ = -1.0;
    Mode mode_ = Mode::ball;
    std::size_t max_support_ = 0;
    std::size_t centre_count_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> cover_;
};

class BoundedSearch {
public:
    BoundedSearch(const Sample& sample, Radius r, std::size_t cap)
        : sample_(sample), r_(r.value()), cap_(cap), locality_(sample, r) {
        const std::size_t n = sample.size();
        neighbours_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double d = sample.distance(i, j);
                if (d > r_ && d <= 2 * r_ * (1 + kLocalTolerance)) neighbours_[i].push_back(j);
            }
        }
    }

    IndexList run() {
        best_ = {0};
        const std::size_t n = sample_.size();
        for (std::size_t v = 0; v < n && best_.size() < cap_; ++v) {
            if (1 + neighbours_[v].size() <= best_.size()) continue;
            Locality::State start;
            locality_.extend(locality_.empty(), v, start);
            grow(start, neighbours_[v]);
        }
        return best_;
    }

private:
    void grow(const Locality::State& state, const std::vector<std::size_t>& candidates) {
        if (state.members.size() > best_.size()) best_ = state.members;
        if (best_.size() >= cap_) return;
        for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
            if (state.members.size() + (candidates.size() - idx) <= best_.size()) return;
            const std::size_t v = candidates[idx];
            Locality::State next;
            if (!locality_.extend(state, v, next)) continue;
            std::vector<std::size_t> rest;
            const auto& nv = neighbours_[v];
            for (std::size_t j = idx + 1; j < candidates.size(); ++j) {
                if (std::binary_search(nv.begin(), nv.end(), candidates[j])) rest.push_back(candidates[j]);
            }
            grow(next, rest);
            if (best_.size() >= cap_) return;
        }
    }

    const Sample& sample_;
    double r_;
    std::size_t cap_;
    Locality locality_;
    std::vector<std::vector<std::size_t>> neighbours_;
    IndexList best_;
};

} // namespace

bool locality_is_exact(const MetricSpace& space) {
    switch (space.kind()) {
    case MetricKind::euclidean:
    case MetricKind::discrete:
    case MetricKind::precomputed: return true;
    case MetricKind::lp: return euclidean_like(space);
    case MetricKind::scaled_indicator: return false;
    }
    return false;
}

bool is_r_local(const Sample& sample, std::span<const std::size_t> indices, Radius r) {
    for (std::size_t i : indices) {
        if (i >= sample.size()) throw ArgumentError("sample index out of range");
    }
    Locality locality(sample, r);
    Locality::State state = locality.empty();
    for (std::size_t i : indices) {
        Locality::State next;
        if (!locality.extend(state, i, next)) return false;
        state = std::move(next);
    }
    return true;
}

SeparationReport h_exact(const Sample& sample, Radius r, std::size_t cap) {
    if (sample.empty()) throw ArgumentError("h of an empty sample");
    if (cap < 1) throw ArgumentError("cap must be at least 1");

    SeparationReport report;
    report.method = SeparationMethod::brute_force;
    if (sample.space().kind() == MetricKind::discrete) {
        report.value = 1;
        report.certified = Certification::exact;
        report.witness = IndexList{0};
        return report;
    }

    IndexList best = BoundedSearch(sample, r, cap).run();
    std::sort(best.begin(), best.end());
    report.value = best.size();
    report.witness = best;
    const bool capped = best.size() >= cap;
    report.certified = (capped || !locality_is_exact(sample.space())) ? Certification::lower_bound : Certification::exact;
    return report;
}

SeparationReport h_clique_relaxed(const Sample& sample, Radius r) {
    if (sample.empty()) throw ArgumentError("h of an empty sample");
    const std::size_t n = sample.size();
    const double rv = r.value();
    Graph graph(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = sample.distance(i, j);
            if (d > rv && d <= 2 * rv * (1 + kLocalTolerance)) graph.add_edge(i, j);
        }
    }
    IndexList clique = maximum_clique(graph);
    SeparationReport report;
    report.value = clique.size();
    report.certified = Certification::upper_bound;
    report.witness = std::move(clique);
    report.method = SeparationMethod::clique_relaxation;
    return report;
}

std::optional<std::uint64_t> packing_cap(const MetricSpace& space) {
    std::uint64_t base = 0;
    switch (space.kind()) {
    case MetricKind::discrete: return 1;
    case MetricKind::euclidean: base = 3; break;
    case MetricKind::lp: base = 8; break;
    case MetricKind::precomputed:
    case MetricKind::scaled_indicator: return std::nullopt;
    }
    const std::size_t dim = space.dimension().value_or(1);
    std::uint64_t value = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (value > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
        value *= base;
    }
    return value;
}

double eh_upper_from_sample(std::size_t h_observed, double delta) {
    if (h_observed < 1) throw ArgumentError("observed h must be at least 1");
    require_probability(delta);
    const double root = std::sqrt(static_cast<double>(h_observed)) + std::sqrt(2.0 * std::log(1.0 / delta));
    return root * root;
}

} // namespace missmass
