#pragma once

#include "missmass/estimators.hpp"
#include "missmass/io.hpp"
#include "missmass/sample.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace missmass {

enum class Verdict { normal, anomalous };
enum class CertificateMethod { good_turing, martingale_min };

std::string to_string(Verdict v);
std::string to_string(CertificateMethod m);
CertificateMethod certificate_method_from_string(const std::string& name);

/// Flags a point as anomalous when it is farther than gamma from every
/// training point. Its false-alarm rate on fresh normal data is the
/// conditional missing mass of the training sample at radius gamma.
class ProximityClassifier {
public:
    ProximityClassifier(Sample training, Radius gamma);

    const Sample& training() const noexcept { return training_; }
    Radius gamma() const noexcept { return gamma_; }

    /// Throws DimensionError if y does not belong to the training space.
    Verdict classify(PointView y) const;

private:
    Sample training_;
    Radius gamma_;
};

Verdict classify(const ProximityClassifier& classifier, PointView y);

/// Upper confidence bound on the false-alarm rate at level 1-delta.
Estimate false_alarm_certificate(const ProximityClassifier& classifier, double delta, CertificateMethod method);

/// Index of the nearest codebook point; lowest index on ties.
std::size_t nn_encode(const Sample& codebook, PointView x);

struct CodingReport {
    /// Sample indices used as codewords.
    IndexList codebook;
    Radius epsilon;
    /// Radius at which the missing mass is bounded: epsilon, or epsilon/2 with a net.
    Radius target_radius;
    bool use_net = false;
    double delta = 0.0;
    /// Bound on the probability that a fresh point is reconstructed with error > epsilon.
    Estimate exceed_prob_estimate;
    /// Upper bound minus its confidence slack.
    double empirical_part = 0.0;
    std::optional<Estimate> net_estimate;
    std::optional<Estimate> martingale_estimate;
    /// diameter * bound + epsilon, when a diameter is declared.
    std::optional<double> expected_error_bound;
    std::optional<double> diameter;
};

/// Nearest-neighbour coding with either the full sample or a farthest-first
/// epsilon/2-net as codebook. With a net, the exceed probability is the smaller
/// of the net bound and the martingale bound at radius epsilon/2, each taken at
/// level delta/2.
CodingReport coding_report(const Sample& sample, Radius epsilon, double delta, bool use_net,
                           std::optional<double> diameter = std::nullopt);

/// JSON persistence: space description, gamma and training points (symbols for
/// discrete spaces, the full matrix for precomputed ones).
std::string classifier_to_json(const ProximityClassifier& classifier);
ProximityClassifier classifier_from_json(const std::string& text);

/// Reads query points as CSV (symbols for a discrete classifier) and writes
/// "index,verdict,nearest_index,nearest_distance" rows. Returns the number of
/// anomalous queries.
std::size_t classify_csv(const ProximityClassifier& classifier, std::istream& in, std::ostream& out,
                         HeaderMode header = HeaderMode::automatic);

} // namespace missmass
