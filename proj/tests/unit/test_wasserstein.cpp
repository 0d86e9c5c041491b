#include "missmass/distributions.hpp"
#include "missmass/errors.hpp"
#include "missmass/oracles.hpp"
#include "missmass/wasserstein.hpp"

#include <doctest.h>

#include <cmath>

using namespace missmass;

namespace {

Sample line(const std::vector<double>& xs) {
    std::vector<Point> pts;
    for (double x : xs) pts.push_back({x});
    return Sample(MetricSpace::euclidean(1), pts);
}

std::vector<Radius> radii(std::initializer_list<double> values) {
    std::vector<Radius> out;
    for (double v : values) out.emplace_back(v);
    return out;
}

} // namespace

TEST_CASE("lower bound arithmetic") {
    CHECK(w1_lower_bound(0.0, Radius(0.3)) == 0.0);
    CHECK(w1_lower_bound(0.7, Radius(0.0)) == 0.0);
    CHECK(w1_lower_bound(0.5, Radius(0.25)) == 0.125);
    CHECK_THROWS_AS(w1_lower_bound(1.5, Radius(0.25)), ArgumentError);
}

TEST_CASE("upper bounds at the largest admissible net") {
    const std::size_t dim = 50;
    const double c = 0.5 / std::sqrt(2.0);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < dim; ++i) {
        Point p(dim, 0.0);
        p[i] = c;
        pts.push_back(p);
    }
    for (std::size_t k = 0; k < 53; ++k) pts.push_back(pts.front());
    const Sample s(MetricSpace::euclidean(dim), pts);
    REQUIRE(s.size() == 103);
    std::vector<std::size_t> net(dim);
    for (std::size_t i = 0; i < dim; ++i) net[i] = i;
    const auto rep = w1_upper_bounds(s, Radius(0.1), net, 0.1, std::nullopt, 1.0);
    const double expected = 0.3 + 3 * std::sqrt(50.0 / 53.0) * (1 + std::sqrt(std::log(2060.0)));
    CHECK(*rep.upper_b_raw == doctest::Approx(expected));
    CHECK(*rep.upper_b == 1.0);
    CHECK_FALSE(rep.upper_a.has_value());

    std::vector<std::size_t> too_many = net;
    const Sample smaller = s.prefix(102);
    CHECK_THROWS_AS(w1_upper_bounds(smaller, Radius(0.1), too_many, 0.1, std::nullopt, 1.0), ArgumentError);
}

TEST_CASE("a net of one point") {
    const auto s = line({0.0, 0.2, 0.5, 0.9, 1.0, 0.3, 0.6});
    const std::vector<std::size_t> net{0};
    const auto rep = w1_upper_bounds(s, Radius(1.0), net, 0.1, 0.0, 1.0);
    CHECK(*rep.upper_b == 1.0);
    CHECK(*rep.upper_b_raw >= 3.0);
}

TEST_CASE("upper bound with the missing mass shrinks with n") {
    double prev = INFINITY;
    for (std::size_t n : {100u, 400u, 1600u, 6400u}) {
        std::vector<double> xs(n, 0.0);
        xs[1] = 1.0;
        const auto s = line(xs);
        const std::vector<std::size_t> net{0, 1};
        const auto rep = w1_upper_bounds(s, Radius(1e-6), net, 0.1, 0.0, 1.0);
        CHECK(*rep.upper_a_raw < prev);
        prev = *rep.upper_a_raw;
        CHECK(*rep.upper_b_raw >= 3e-6);
    }
    CHECK(prev < 0.2);
}

TEST_CASE("invalid inputs") {
    const auto s = line({0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6});
    const std::vector<std::size_t> bad{0};
    CHECK_THROWS_AS(w1_upper_bounds(s, Radius(0.1), bad, 0.1, std::nullopt, 1.0), InvalidNetError);
    const std::vector<std::size_t> ok{0};
    CHECK_THROWS_AS(w1_upper_bounds(s, Radius(1.0), ok, 0.1, std::nullopt, 0.5), ArgumentError);
    CHECK_THROWS_AS(w1_report(s, std::nullopt, std::vector<Radius>{}, 0.1), ArgumentError);
    CHECK_THROWS_AS(w1_report(s, std::nullopt, radii({0.1}), 1.5), ArgumentError);
}

TEST_CASE("point mass gives zero lower bounds and 3r upper bounds") {
    const auto s = line(std::vector<double>(40, 0.25));
    const auto rows = w1_report(s, DistributionSpec{RealAtoms{{0.25}, {1.0}}}, radii({0.05, 0.01, 0.1}), 0.1);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].r.value() == 0.01);
    for (const auto& row : rows) {
        CHECK(row.lower == 0.0);
        CHECK(row.m == 1);
        CHECK(*row.upper_b == doctest::Approx(3 * row.r.value()));
        CHECK(*row.upper_b >= 3 * row.r.value());
    }
    CHECK(*best_upper(rows) == doctest::Approx(0.03));
    CHECK(best_lower(rows) == 0.0);
}

TEST_CASE("sandwich on uniform samples") {
    const auto mu = UniformInterval{0, 1};
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto s = draw_sample(mu, 500, seed);
        const auto rows = w1_report(s, DistributionSpec{mu}, radii({0.02, 0.05, 0.1, 0.2}), 0.1);
        const double exact = exact_wasserstein_1d(mu, s);
        CHECK(best_lower(rows) <= exact);
        REQUIRE(best_upper(rows));
        CHECK(exact <= *best_upper(rows));
        for (const auto& row : rows) {
            CHECK(row.mhat_source == "oracle");
            CHECK(row.lower >= 0.0);
            if (row.upper_a) CHECK(row.lower <= *row.upper_a);
            if (row.upper_b) {
                CHECK(row.lower <= *row.upper_b);
                CHECK(*row.upper_b_raw >= 3 * row.r.value());
            }
            CHECK(row.delta == doctest::Approx(0.1 / 4));
        }
    }
}

TEST_CASE("the empirical route works without the law") {
    const auto s = draw_sample(UniformInterval{0, 1}, 300, 2);
    const auto rows = w1_report(s, std::nullopt, radii({0.001, 0.01}), 0.1);
    for (const auto& row : rows) {
        CHECK(row.mhat_source == "good_turing");
        CHECK(row.mhat_lower <= *row.mhat_upper);
    }
}

TEST_CASE("oversized nets are marked rather than bounded") {
    const auto s = line({0.0, 1.0, 2.0, 3.0, 4.0});
    const auto rows = w1_report(s, std::nullopt, radii({0.5}), 0.1);
    CHECK(rows[0].net_too_large);
    CHECK_FALSE(rows[0].upper_b.has_value());
}

TEST_CASE("scaling distances scales every bound") {
    const double c = 4.0;
    const auto base = draw_sample(UniformInterval{0, 1}, 200, 9);
    std::vector<Point> scaled_pts;
    for (std::size_t i = 0; i < base.size(); ++i) scaled_pts.push_back({c * base.point(i)[0]});
    const Sample scaled(MetricSpace::euclidean(1), scaled_pts);
    const auto rows = w1_report(base, DistributionSpec{UniformInterval{0, 1}}, radii({0.01, 0.05, 0.3}), 0.1);
    const auto rows_c = w1_report(scaled, DistributionSpec{UniformInterval{0, c}}, radii({0.04, 0.2, 1.2}), 0.1);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(rows_c[k].net_indices == rows[k].net_indices);
        CHECK(rows_c[k].lower == doctest::Approx(c * rows[k].lower));
        CHECK(rows_c[k].scale == doctest::Approx(c * rows[k].scale));
        if (rows[k].upper_b) CHECK(*rows_c[k].upper_b == doctest::Approx(c * *rows[k].upper_b));
        if (rows[k].upper_a) CHECK(*rows_c[k].upper_a == doctest::Approx(c * *rows[k].upper_a));
    }
    CHECK(exact_wasserstein_1d(UniformInterval{0, c}, scaled) ==
          doctest::Approx(c * exact_wasserstein_1d(UniformInterval{0, 1}, base)));
}

TEST_CASE("default grid spans low percentiles to the median") {
    const auto s = draw_sample(UniformInterval{0, 1}, 100, 3);
    const auto grid = default_r_grid(s, 20);
    CHECK(grid.size() == 20);
    CHECK(grid.front() <= grid.back());
    CHECK(grid.back().value() == doctest::Approx(pairwise_distance_quantile(s, 0.5)));
    for (std::size_t k = 1; k < grid.size(); ++k) CHECK(grid[k - 1] <= grid[k]);
}

TEST_CASE("declared diameters are respected") {
    const auto s = line({0.0, 0.5});
    WassersteinOptions o;
    o.diameter = 2.0;
    CHECK(normalization_scale(s, o) == 2.0);
    o.diameter = 0.1;
    CHECK_THROWS_AS(normalization_scale(s, o), ArgumentError);
    CHECK(normalization_scale(s, {}) == doctest::Approx(0.525));
}
