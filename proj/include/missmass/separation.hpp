#pragma once

#include "missmass/sample.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace missmass {

enum class Certification { exact, upper_bound, lower_bound };
enum class SeparationMethod { brute_force, clique_relaxation, packing_cap };

std::string to_string(Certification c);
std::string to_string(SeparationMethod m);

/// Value of the local-separation statistic h(X,r): the largest r-separated
/// sub-sample that fits inside one closed r-ball.
struct SeparationReport {
    std::size_t value = 1;
    Certification certified = Certification::exact;
    std::optional<IndexList> witness;
    SeparationMethod method = SeparationMethod::brute_force;
};

/// Whether some centre y has d(x,y) <= r for every listed sample point.
///
/// Euclidean spaces (and lp spaces that coincide with them) use an exact
/// minimum-enclosing-ball test; precomputed spaces scan every point of the
/// matrix universe; scaled-indicator spaces check the interval length. For
/// other lp spaces only sample points are tried as centres, so a `false`
/// answer is not conclusive there.
bool is_r_local(const Sample& sample, std::span<const std::size_t> indices, Radius r);

/// True when is_r_local answers exactly for this space.
bool locality_is_exact(const MetricSpace& space);

/// Bounded exhaustive search. Exact when h < cap and locality is decidable for
/// the space; otherwise a lower bound (cap reached, or sample-point centres).
SeparationReport h_exact(const Sample& sample, Radius r, std::size_t cap = 8);

/// Maximum clique in the graph joining pairs with r < d <= 2r; an upper bound on h.
SeparationReport h_clique_relaxed(const Sample& sample, Radius r);

/// Packing-number ceiling on h: 3^D for euclidean, 8^D for lp, 1 for discrete.
/// None for precomputed and scaled-indicator spaces, and when the power
/// overflows 64 bits.
std::optional<std::uint64_t> packing_cap(const MetricSpace& space);

/// (sqrt(h) + sqrt(2 ln(1/delta)))^2: an upper estimate of E[h] at level 1-delta.
double eh_upper_from_sample(std::size_t h_observed, double delta);

} // namespace missmass
