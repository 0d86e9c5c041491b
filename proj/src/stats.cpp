#include "missmass/stats.hpp"

#include "missmass/errors.hpp"

#include <algorithm>
#include <cmath>

namespace missmass {

Summary summarize(std::span<const double> values) {
    Summary s;
    s.count = values.size();
    if (s.count == 0) return s;
    const double n = static_cast<double>(s.count);
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / n;
    double m2 = 0.0;
    double m4 = 0.0;
    for (double v : values) {
        const double d = v - s.mean;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    if (s.count > 1) {
        s.variance = m2 / (n - 1.0);
        s.se_mean = std::sqrt(s.variance / n);
        const double central2 = m2 / n;
        const double central4 = m4 / n;
        s.se_variance = std::sqrt(std::max(0.0, central4 - central2 * central2) / n);
    }
    return s;
}

double frequency_se(double frequency, std::size_t count) {
    if (count == 0) throw ArgumentError("frequency over zero trials");
    return std::sqrt(std::max(0.0, frequency * (1.0 - frequency)) / static_cast<double>(count));
}

double hoeffding_half_width(std::size_t count, double alpha) {
    if (count == 0) throw ArgumentError("half width over zero draws");
    if (!(alpha > 0.0 && alpha < 1.0)) throw ArgumentError("alpha must lie in (0,1)");
    return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(count)));
}

} // namespace missmass
