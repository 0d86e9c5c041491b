#include "missmass/enclosing_ball.hpp"

#include "missmass/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

namespace missmass {

namespace {

struct Circumball {
    double radius_sq;
    // Largest squared distance from the centre to any of the k points.
    double reach_sq;
};

// Circumcentre of the points in `support` (indices into the k points) within
// their affine hull. Returns nullopt when the support is affinely dependent.
std::optional<Circumball> circumball(std::span<const double> dsq, std::size_t k,
                                     const std::vector<std::size_t>& support) {
    auto d = [&](std::size_t a, std::size_t b) { return dsq[a * k + b]; };
    const std::size_t p0 = support[0];
    const std::size_t m = support.size() - 1;
    if (m == 0) {
        double reach = 0.0;
        for (std::size_t q = 0; q < k; ++q) reach = std::max(reach, d(p0, q));
        return Circumball{0.0, reach};
    }

    Eigen::MatrixXd gram(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t a = support[i + 1];
            const std::size_t b = support[j + 1];
            gram(i, j) = 0.5 * (d(p0, a) + d(p0, b) - d(a, b));
        }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
    lu.setThreshold(1e-10);
    if (lu.rank() < static_cast<Eigen::Index>(m)) return std::nullopt;
    const Eigen::VectorXd rhs = 0.5 * gram.diagonal();
    const Eigen::VectorXd lambda = lu.solve(rhs);
    const double radius_sq = lambda.dot(gram * lambda);

    double reach = 0.0;
    for (std::size_t q = 0; q < k; ++q) {
        double cross = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t b = support[j + 1];
            cross += lambda(static_cast<Eigen::Index>(j)) * 0.5 * (d(p0, q) + d(p0, b) - d(q, b));
        }
        reach = std::max(reach, d(p0, q) - 2.0 * cross + radius_sq);
    }
    return Circumball{radius_sq, reach};
}

// Calls visit(support) for every non-empty subset of {0..k-1} in order of
// increasing size; stops early when visit returns true.
template <class Visit>
bool for_each_support(std::size_t k, std::size_t max_size, Visit&& visit) {
    std::vector<std::size_t> support;
    for (std::size_t size = 1; size <= std::min(k, max_size); ++size) {
        support.resize(size);
        for (std::size_t i = 0; i < size; ++i) support[i] = i;
        for (;;) {
            if (visit(support)) return true;
            std::size_t pos = size;
            while (pos > 0 && support[pos - 1] == k - size + pos - 1) --pos;
            if (pos == 0) break;
            ++support[pos - 1];
            for (std::size_t i = pos; i < size; ++i) support[i] = support[i - 1] + 1;
        }
    }
    return false;
}

void check_input(std::span<const double> dsq, std::size_t k) {
    if (k == 0) throw ArgumentError("enclosing ball of an empty point set");
    if (dsq.size() != k * k) throw ArgumentError("squared distance matrix has the wrong size");
}

} // namespace

double min_enclosing_ball_radius(std::span<const double> squared_distances, std::size_t k) {
    check_input(squared_distances, k);
    double scale = 0.0;
    for (double v : squared_distances) scale = std::max(scale, v);
    const double slack = 1e-12 * std::max(scale, 1e-300);

    double best = std::numeric_limits<double>::infinity();
    for_each_support(k, k, [&](const std::vector<std::size_t>& support) {
        if (auto ball = circumball(squared_distances, k, support)) {
            if (ball->reach_sq <= ball->radius_sq + slack) best = std::min(best, ball->radius_sq);
        }
        return false;
    });
    return std::sqrt(std::max(best, 0.0));
}

bool fits_in_ball(std::span<const double> squared_distances, std::size_t k, double radius, double rel_tol,
                  std::size_t max_support) {
    check_input(squared_distances, k);
    const double limit = radius * (1.0 + rel_tol);
    const double limit_sq = limit * limit;
    return for_each_support(k, max_support, [&](const std::vector<std::size_t>& support) {
        auto ball = circumball(squared_distances, k, support);
        return ball && ball->radius_sq <= limit_sq && ball->reach_sq <= limit_sq;
    });
}

} // namespace missmass
