#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace missmass {

enum class BoundKind {
    variance_G,
    variance_Mhat,
    tail_G,
    tail_Mhat,
    gt_variance,
    gt_l2,
    martingale_tail,
    martingale_relative_tail,
    martingale_bias,
};

std::string to_string(BoundKind kind);

/// One evaluated closed-form bound with every input echoed back.
///
/// For tail bounds `value` is the deviation threshold and `probability` the
/// failure probability (clipped to 1). A report is vacuous when it cannot say
/// anything about a [0,1]-valued quantity: variance bounds at or above 1/4,
/// thresholds or probabilities at or above 1.
struct BoundReport {
    BoundKind kind = BoundKind::variance_G;
    std::map<std::string, double> inputs;
    double value = 0.0;
    std::optional<double> probability;
    std::optional<double> raw_probability;
    bool vacuous = false;
    /// Unmet hypotheses (the value is still computed).
    std::vector<std::string> warnings;
};

/// 2(1 + E_h)/n.
BoundReport variance_bound_G(double expected_h, std::size_t n);
/// (2 E_h + 4(e-2)(ln n + 1))/(n-1).
BoundReport variance_bound_Mhat(double expected_h, std::size_t n);
/// Threshold 12 sqrt((1+E_h) t/n) + 23 t/sqrt(n), probability min(1, 15 e^-t).
BoundReport tail_bound_G(double expected_h, std::size_t n, double t);
/// Threshold 12 sqrt(E_h t/n) + 37 t/sqrt(n-1), probability min(1, 2n e^-t).
BoundReport tail_bound_Mhat(double expected_h, std::size_t n, double t);
/// (3/n, sqrt(7/n)): the variance of G - H and the L2 distance between G and
/// the conditional missing mass.
std::pair<BoundReport, BoundReport> gt_error_bounds(std::size_t n);

/// P(Mhat - T_m > t) <= exp(-m t^2 / 2).
BoundReport martingale_tail_bound(std::size_t m, double t);
/// P(Mhat - 2 T_m > t) <= exp(-m t / (4(e-2))).
BoundReport martingale_relative_tail_bound(std::size_t m, double t);
/// E[T_m - Mhat] <= ln(n/(n-m)), for m < n.
BoundReport martingale_bias_bound(std::size_t n, std::size_t m);

} // namespace missmass
