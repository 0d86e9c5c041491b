#include "missmass/bounds.hpp"

#include "missmass/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace missmass {

std::string to_string(BoundKind kind) {
    switch (kind) {
    case BoundKind::variance_G: return "variance_G";
    case BoundKind::variance_Mhat: return "variance_Mhat";
    case BoundKind::tail_G: return "tail_G";
    case BoundKind::tail_Mhat: return "tail_Mhat";
    case BoundKind::gt_variance: return "gt_variance";
    case BoundKind::gt_l2: return "gt_l2";
    case BoundKind::martingale_tail: return "martingale_tail";
    case BoundKind::martingale_relative_tail: return "martingale_relative_tail";
    case BoundKind::martingale_bias: return "martingale_bias";
    }
    return "unknown";
}

namespace {

constexpr double kVarianceCeiling = 0.25;
constexpr double kEMinus2 = std::numbers::e - 2.0;

void check_expected_h(double eh) {
    if (!(eh >= 1.0) || !std::isfinite(eh)) throw ArgumentError("E[h] must be a finite value >= 1");
}

void check_t(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw ArgumentError("t must be a finite positive value");
}

void check_n(std::size_t n, std::size_t minimum) {
    if (n < minimum) throw ArgumentError("n must be at least " + std::to_string(minimum));
}

BoundReport concentration_report(BoundKind kind, double eh, std::size_t n) {
    BoundReport report;
    report.kind = kind;
    report.inputs["E_h"] = eh;
    report.inputs["n"] = static_cast<double>(n);
    if (n < 16) report.warnings.push_back("hypothesis n >= 16 not met (n = " + std::to_string(n) + ")");
    return report;
}

void set_tail(BoundReport& report, double threshold, double raw_probability) {
    report.value = threshold;
    report.raw_probability = raw_probability;
    report.probability = std::min(1.0, raw_probability);
    report.vacuous = threshold >= 1.0 || raw_probability >= 1.0;
}

} // namespace

BoundReport variance_bound_G(double expected_h, std::size_t n) {
    check_expected_h(expected_h);
    check_n(n, 1);
    BoundReport report = concentration_report(BoundKind::variance_G, expected_h, n);
    report.value = 2.0 * (1.0 + expected_h) / static_cast<double>(n);
    report.vacuous = report.value >= kVarianceCeiling;
    return report;
}

BoundReport variance_bound_Mhat(double expected_h, std::size_t n) {
    check_expected_h(expected_h);
    check_n(n, 2);
    BoundReport report = concentration_report(BoundKind::variance_Mhat, expected_h, n);
    const double nd = static_cast<double>(n);
    report.value = (2.0 * expected_h + 4.0 * kEMinus2 * (std::log(nd) + 1.0)) / (nd - 1.0);
    report.vacuous = report.value >= kVarianceCeiling;
    return report;
}

BoundReport tail_bound_G(double expected_h, std::size_t n, double t) {
    check_expected_h(expected_h);
    check_n(n, 1);
    check_t(t);
    BoundReport report = concentration_report(BoundKind::tail_G, expected_h, n);
    report.inputs["t"] = t;
    const double nd = static_cast<double>(n);
    const double threshold = 12.0 * std::sqrt((1.0 + expected_h) * t / nd) + 23.0 * t / std::sqrt(nd);
    set_tail(report, threshold, 15.0 * std::exp(-t));
    return report;
}

BoundReport tail_bound_Mhat(double expected_h, std::size_t n, double t) {
    check_expected_h(expected_h);
    check_n(n, 2);
    check_t(t);
    BoundReport report = concentration_report(BoundKind::tail_Mhat, expected_h, n);
    report.inputs["t"] = t;
    const double nd = static_cast<double>(n);
    const double threshold = 12.0 * std::sqrt(expected_h * t / nd) + 37.0 * t / std::sqrt(nd - 1.0);
    set_tail(report, threshold, 2.0 * nd * std::exp(-t));
    return report;
}

std::pair<BoundReport, BoundReport> gt_error_bounds(std::size_t n) {
    check_n(n, 1);
    const double nd = static_cast<double>(n);
    BoundReport variance;
    variance.kind = BoundKind::gt_variance;
    variance.inputs["n"] = nd;
    variance.value = 3.0 / nd;
    variance.vacuous = variance.value >= kVarianceCeiling;

    BoundReport l2;
    l2.kind = BoundKind::gt_l2;
    l2.inputs["n"] = nd;
    l2.value = std::sqrt(7.0 / nd);
    l2.vacuous = l2.value >= 1.0;
    return {variance, l2};
}

BoundReport martingale_tail_bound(std::size_t m, double t) {
    check_n(m, 1);
    check_t(t);
    BoundReport report;
    report.kind = BoundKind::martingale_tail;
    report.inputs["m"] = static_cast<double>(m);
    report.inputs["t"] = t;
    set_tail(report, t, std::exp(-static_cast<double>(m) * t * t / 2.0));
    return report;
}

BoundReport martingale_relative_tail_bound(std::size_t m, double t) {
    check_n(m, 1);
    check_t(t);
    BoundReport report;
    report.kind = BoundKind::martingale_relative_tail;
    report.inputs["m"] = static_cast<double>(m);
    report.inputs["t"] = t;
    set_tail(report, t, std::exp(-static_cast<double>(m) * t / (4.0 * kEMinus2)));
    return report;
}

BoundReport martingale_bias_bound(std::size_t n, std::size_t m) {
    if (m < 1 || m >= n) throw ArgumentError("bias bound needs 1 <= m < n");
    BoundReport report;
    report.kind = BoundKind::martingale_bias;
    report.inputs["n"] = static_cast<double>(n);
    report.inputs["m"] = static_cast<double>(m);
    report.value = std::log(static_cast<double>(n) / static_cast<double>(n - m));
    report.vacuous = report.value >= 1.0;
    return report;
}

} // namespace missmass
