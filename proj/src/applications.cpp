#include "missmass/applications.hpp"

#include "missmass/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <utility>

namespace missmass {

std::string to_string(Verdict v) { return v == Verdict::normal ? "normal" : "anomalous"; }

std::string to_string(CertificateMethod m) {
    return m == CertificateMethod::good_turing ? "good_turing" : "martingale_min";
}

CertificateMethod certificate_method_from_string(const std::string& name) {
    if (name == "good_turing") return CertificateMethod::good_turing;
    if (name == "martingale_min") return CertificateMethod::martingale_min;
    throw ArgumentError("unknown certificate method '" + name + "'");
}

ProximityClassifier::ProximityClassifier(Sample training, Radius gamma) : training_(std::move(training)), gamma_(gamma) {
    if (training_.empty()) throw ArgumentError("classifier needs a non-empty training sample");
}

Verdict ProximityClassifier::classify(PointView y) const {
    training_.space().validate(y);
    const std::size_t nearest = nearest_index(training_, y);
    return training_.distance_to(nearest, y) > gamma_.value() ? Verdict::anomalous : Verdict::normal;
}

Verdict classify(const ProximityClassifier& classifier, PointView y) { return classifier.classify(y); }

Estimate false_alarm_certificate(const ProximityClassifier& classifier, double delta, CertificateMethod method) {
    require_probability(delta);
    const Sample& training = classifier.training();
    if (method == CertificateMethod::martingale_min) {
        return martingale_upper_bound(training, classifier.gamma(), delta);
    }
    Estimate e = good_turing_interval(training, classifier.gamma(), delta);
    e.raw_value = e.value + *e.radius;
    e.value = std::min(1.0, e.raw_value);
    e.side = Side::upper;
    e.vacuous = e.raw_value >= 1.0;
    return e;
}

std::size_t nn_encode(const Sample& codebook, PointView x) {
    if (codebook.empty()) throw ArgumentError("codebook is empty");
    codebook.space().validate(x);
    return nearest_index(codebook, x);
}

CodingReport coding_report(const Sample& sample, Radius epsilon, double delta, bool use_net,
                           std::optional<double> diameter) {
    require_probability(delta);
    if (sample.empty()) throw ArgumentError("coding needs a non-empty sample");
    if (diameter && !(*diameter >= 0.0 && std::isfinite(*diameter))) {
        throw ArgumentError("declared diameter must be finite and non-negative");
    }
    CodingReport report;
    report.epsilon = epsilon;
    report.use_net = use_net;
    report.delta = delta;
    report.diameter = diameter;
    if (use_net) {
        const Radius half(epsilon.value() / 2.0);
        report.target_radius = half;
        report.codebook = farthest_first_net(sample, half, 0);
        report.net_estimate = net_missing_mass_bound(sample, half, report.codebook, delta / 2.0);
        report.martingale_estimate = martingale_upper_bound(sample, half, delta / 2.0);
        report.exceed_prob_estimate = report.net_estimate->value <= report.martingale_estimate->value
                                          ? *report.net_estimate
                                          : *report.martingale_estimate;
        report.empirical_part = std::max(0.0, report.martingale_estimate->raw_value - *report.martingale_estimate->radius);
    } else {
        report.target_radius = epsilon;
        report.codebook.resize(sample.size());
        for (std::size_t i = 0; i < sample.size(); ++i) report.codebook[i] = i;
        report.martingale_estimate = martingale_upper_bound(sample, epsilon, delta);
        report.exceed_prob_estimate = *report.martingale_estimate;
        report.empirical_part = std::max(0.0, report.martingale_estimate->raw_value - *report.martingale_estimate->radius);
    }
    if (diameter) report.expected_error_bound = *diameter * report.exceed_prob_estimate.value + epsilon.value();
    return report;
}

std::string classifier_to_json(const ProximityClassifier& classifier) {
    const Sample& training = classifier.training();
    const MetricSpace& space = training.space();
    nlohmann::json doc;
    doc["gamma"] = classifier.gamma().value();
    nlohmann::json s;
    s["kind"] = to_string(space.kind());
    if (auto dim = space.dimension()) s["dimension"] = *dim;
    if (space.kind() == MetricKind::lp || space.kind() == MetricKind::scaled_indicator) s["p"] = space.exponent();
    if (const DistanceMatrix* m = space.matrix()) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < m->size(); ++i) {
            auto row = m->row(i);
            rows.push_back(std::vector<double>(row.begin(), row.end()));
        }
        s["matrix"] = rows;
    }
    doc["space"] = s;
    if (space.kind() == MetricKind::discrete && !training.labels().empty()) {
        doc["training"] = training.labels();
    } else {
        doc["training"] = training.points();
    }
    return doc.dump(2);
}

ProximityClassifier classifier_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid classifier JSON: ") + e.what(), 0);
    }
    try {
        const Radius gamma(doc.at("gamma").get<double>());
        const auto& s = doc.at("space");
        const MetricKind kind = metric_kind_from_string(s.at("kind").get<std::string>());
        const auto& training = doc.at("training");
        switch (kind) {
        case MetricKind::discrete: {
            std::vector<std::string> labels = training.get<std::vector<std::string>>();
            std::map<std::string, double> ids;
            std::vector<Point> pts;
            for (const auto& label : labels) {
                auto [it, inserted] = ids.emplace(label, static_cast<double>(ids.size()));
                pts.push_back({it->second});
            }
            return ProximityClassifier(Sample(MetricSpace::discrete(), pts, std::move(labels)), gamma);
        }
        case MetricKind::euclidean:
            return ProximityClassifier(
                Sample(MetricSpace::euclidean(s.at("dimension").get<std::size_t>()), training.get<std::vector<Point>>()),
                gamma);
        case MetricKind::lp:
            return ProximityClassifier(Sample(MetricSpace::lp(s.at("dimension").get<std::size_t>(), s.at("p").get<double>()),
                                              training.get<std::vector<Point>>()),
                                       gamma);
        case MetricKind::scaled_indicator:
            return ProximityClassifier(
                Sample(MetricSpace::scaled_indicator(s.at("p").get<double>()), training.get<std::vector<Point>>()), gamma);
        case MetricKind::precomputed: {
            auto matrix = DistanceMatrix::from_rows(s.at("matrix").get<std::vector<std::vector<double>>>());
            return ProximityClassifier(Sample(MetricSpace::precomputed(std::move(matrix)), training.get<std::vector<Point>>()),
                                       gamma);
        }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed classifier JSON: ") + e.what(), 0);
    }
    throw ParseError("unsupported classifier space", 0);
}

std::size_t classify_csv(const ProximityClassifier& classifier, std::istream& in, std::ostream& out, HeaderMode header) {
    const Sample& training = classifier.training();
    const bool discrete = training.space().kind() == MetricKind::discrete;
    const PointTable table = parse_csv_points(in, header);

    std::vector<Point> queries;
    if (discrete) {
        std::map<std::string, double> ids;
        const auto& labels = training.labels();
        for (std::size_t i = 0; i < training.size(); ++i) {
            ids.emplace(labels.empty() ? std::to_string(i) : labels[i], training.point(i)[0]);
        }
        double fresh = 0.0;
        for (std::size_t i = 0; i < training.size(); ++i) fresh = std::max(fresh, training.point(i)[0] + 1.0);
        for (const auto& raw : table.raw_rows) {
            auto it = ids.find(raw);
            queries.push_back({it != ids.end() ? it->second : fresh});
        }
    } else {
        if (table.symbolic) throw ParseError("symbolic queries need a discrete classifier", 0);
        queries = table.points;
    }

    out << "index,verdict,nearest_index,nearest_distance\n";
    std::size_t anomalous = 0;
    for (std::size_t q = 0; q < queries.size(); ++q) {
        training.space().validate(queries[q]);
        const std::size_t nearest = nearest_index(training, queries[q]);
        const double d = training.distance_to(nearest, queries[q]);
        const Verdict v = d > classifier.gamma().value() ? Verdict::anomalous : Verdict::normal;
        anomalous += v == Verdict::anomalous ? 1 : 0;
        out << q << ',' << to_string(v) << ',' << nearest << ',' << format_double(d) << '\n';
    }
    return anomalous;
}

} // namespace missmass
