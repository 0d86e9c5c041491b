#include "missmass/serialize.hpp"

#include "missmass/errors.hpp"
#include "missmass/io.hpp"

#include <cmath>
#include <sstream>

namespace missmass {

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

void write(std::ostringstream& out, const Json& j, int indent, int depth) {
    const bool pretty = indent >= 0;
    auto newline = [&](int level) {
        if (!pretty) return;
        out << '\n' << std::string(static_cast<std::size_t>(indent * level), ' ');
    };
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            out << "{}";
            return;
        }
        out << '{';
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out << ',';
            first = false;
            newline(depth + 1);
            out << Json(it.key()).dump() << (pretty ? ": " : ":");
            write(out, it.value(), indent, depth + 1);
        }
        newline(depth);
        out << '}';
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            out << "[]";
            return;
        }
        out << '[';
        bool first = true;
        for (const auto& item : j) {
            if (!first) out << ',';
            first = false;
            newline(depth + 1);
            write(out, item, indent, depth + 1);
        }
        newline(depth);
        out << ']';
        return;
    }
    case Json::value_t::number_float: {
        const double v = j.get<double>();
        if (!std::isfinite(v)) {
            out << "null";
        } else {
            out << format_double(v);
        }
        return;
    }
    default: out << j.dump(); return;
    }
}

} // namespace

std::string dump_json(const Json& j, int indent) {
    std::ostringstream out;
    write(out, j, indent, 0);
    return out.str();
}

Json to_json(const Estimate& e) {
    Json j;
    j["value"] = e.value;
    j["method"] = to_string(e.method);
    j["m"] = optional_json(e.m);
    j["delta"] = optional_json(e.delta);
    j["radius"] = optional_json(e.radius);
    j["side"] = to_string(e.side);
    j["raw_value"] = e.raw_value;
    j["vacuous"] = e.vacuous;
    return j;
}

Json to_json(const SeparationReport& r) {
    Json j;
    j["value"] = r.value;
    j["certified"] = to_string(r.certified);
    j["method"] = to_string(r.method);
    j["witness"] = optional_json(r.witness);
    return j;
}

Json to_json(const BoundReport& r) {
    Json j;
    j["kind"] = to_string(r.kind);
    Json inputs = Json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    j["inputs"] = inputs;
    j["value"] = r.value;
    j["probability"] = optional_json(r.probability);
    j["raw_probability"] = optional_json(r.raw_probability);
    j["vacuous"] = r.vacuous;
    j["warnings"] = r.warnings;
    return j;
}

Json to_json(const OracleEstimate& e) {
    Json j;
    j["value"] = e.value;
    j["half_width"] = e.half_width;
    j["method"] = to_string(e.method);
    j["draws"] = e.draws;
    j["confidence"] = e.confidence;
    j["seed"] = e.seed;
    return j;
}

Json to_json(const WassersteinReport& r) {
    Json j;
    j["r"] = r.r.value();
    j["delta"] = r.delta;
    j["m"] = r.m;
    j["scale"] = r.scale;
    j["lower"] = r.lower;
    j["mhat_lower"] = r.mhat_lower;
    j["mhat_upper"] = optional_json(r.mhat_upper);
    j["mhat_source"] = r.mhat_source;
    j["upper_a"] = optional_json(r.upper_a);
    j["upper_a_raw"] = optional_json(r.upper_a_raw);
    j["upper_b"] = optional_json(r.upper_b);
    j["upper_b_raw"] = optional_json(r.upper_b_raw);
    j["net_too_large"] = r.net_too_large;
    j["net_indices"] = r.net_indices;
    return j;
}

Json to_json(const CodingReport& r) {
    Json j;
    j["epsilon"] = r.epsilon.value();
    j["target_radius"] = r.target_radius.value();
    j["use_net"] = r.use_net;
    j["delta"] = r.delta;
    j["codebook_size"] = r.codebook.size();
    j["codebook"] = r.codebook;
    j["exceed_prob_estimate"] = to_json(r.exceed_prob_estimate);
    j["empirical_part"] = r.empirical_part;
    j["net_estimate"] = r.net_estimate ? to_json(*r.net_estimate) : Json(nullptr);
    j["martingale_estimate"] = r.martingale_estimate ? to_json(*r.martingale_estimate) : Json(nullptr);
    j["diameter"] = optional_json(r.diameter);
    j["expected_error_bound"] = optional_json(r.expected_error_bound);
    return j;
}

Json to_json(const Summary& s) {
    Json j;
    j["count"] = s.count;
    j["mean"] = s.mean;
    j["variance"] = s.variance;
    j["se_mean"] = s.se_mean;
    j["se_variance"] = s.se_variance;
    return j;
}

Json to_json(const MetricSpace& space) {
    Json j;
    j["kind"] = to_string(space.kind());
    j["dimension"] = optional_json(space.dimension());
    if (space.kind() == MetricKind::lp || space.kind() == MetricKind::scaled_indicator) j["p"] = space.exponent();
    return j;
}

Json to_json(const DistributionSpec& spec) {
    Json j;
    j["kind"] = kind_name(spec);
    if (const auto* d = std::get_if<DiscreteDist>(&spec)) {
        j["symbols"] = d->symbols;
        j["weights"] = d->weights;
    } else if (const auto* u = std::get_if<UniformInterval>(&spec)) {
        j["a"] = u->a;
        j["b"] = u->b;
    } else if (const auto* a = std::get_if<RealAtoms>(&spec)) {
        j["values"] = a->values;
        j["weights"] = a->weights;
    } else if (const auto* s = std::get_if<SphereAtom>(&spec)) {
        j["dim"] = s->dim;
        j["n_design"] = s->n_design;
        j["r_design"] = s->r_design;
    } else if (const auto* b = std::get_if<BasisUniform>(&spec)) {
        j["dim"] = b->dim;
    } else if (const auto* si = std::get_if<ScaledIndicatorDist>(&spec)) {
        j["p"] = si->p;
        j["rate"] = si->rate;
    } else if (const auto* l = std::get_if<LowdimEmbedding>(&spec)) {
        j["intrinsic"] = l->intrinsic;
        j["ambient"] = l->ambient;
    } else if (const auto* g = std::get_if<GaussianMixture>(&spec)) {
        j["means"] = g->means;
        j["weights"] = g->weights;
        j["sigma"] = g->sigma;
    }
    return j;
}

DistributionSpec distribution_from_json(const Json& j) {
    DistributionSpec spec;
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "discrete") {
            DiscreteDist d;
            d.weights = j.at("weights").get<std::vector<double>>();
            if (j.contains("symbols")) {
                d.symbols = j.at("symbols").get<std::vector<std::string>>();
            } else {
                for (std::size_t i = 1; i <= d.weights.size(); ++i) d.symbols.push_back("s" + std::to_string(i));
            }
            spec = d;
        } else if (kind == "discrete_uniform") {
            spec = discrete_uniform(j.at("k").get<std::size_t>());
        } else if (kind == "zipf") {
            spec = zipf(j.at("k").get<std::size_t>());
        } else if (kind == "uniform_interval") {
            spec = UniformInterval{j.value("a", 0.0), j.value("b", 1.0)};
        } else if (kind == "real_atoms") {
            spec = RealAtoms{j.at("values").get<std::vector<double>>(), j.at("weights").get<std::vector<double>>()};
        } else if (kind == "sphere_atom") {
            spec = SphereAtom{j.at("dim").get<std::size_t>(), j.at("n_design").get<std::size_t>(), j.value("r_design", 1.2)};
        } else if (kind == "basis_uniform") {
            spec = BasisUniform{j.at("dim").get<std::size_t>()};
        } else if (kind == "scaled_indicator") {
            spec = ScaledIndicatorDist{j.value("p", 2.0), j.value("rate", 1.0)};
        } else if (kind == "lowdim_embedding") {
            spec = LowdimEmbedding{j.at("intrinsic").get<std::size_t>(), j.at("ambient").get<std::size_t>()};
        } else if (kind == "gaussian_mixture") {
            spec = GaussianMixture{j.at("means").get<std::vector<Point>>(), j.at("weights").get<std::vector<double>>(),
                                   j.value("sigma", 1.0)};
        } else {
            throw ParseError("unknown distribution kind '" + kind + "'", 0);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed distribution spec: ") + e.what(), 0);
    }
    validate(spec);
    return spec;
}

} // namespace missmass
