#include "missmass/distributions.hpp"
#include "missmass/errors.hpp"
#include "missmass/oracles.hpp"
#include "missmass/stats.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace missmass;

namespace {

Sample line(const std::vector<double>& xs) {
    std::vector<Point> pts;
    for (double x : xs) pts.push_back({x});
    return Sample(MetricSpace::euclidean(1), pts);
}

OracleOptions monte_carlo(std::size_t n, std::uint64_t seed) {
    OracleOptions o;
    o.test_points = n;
    o.seed = seed;
    o.force_monte_carlo = true;
    return o;
}

} // namespace

TEST_CASE("missing mass of one point under the uniform law") {
    const auto e = conditional_missing_mass(UniformInterval{0, 1}, line({0.5}), Radius(0.25));
    CHECK(e.value == doctest::Approx(0.5));
    CHECK(e.method == OracleMethod::analytic);
    CHECK(e.half_width == 0.0);
}

TEST_CASE("missing mass of an unseen atom") {
    const DiscreteDist mu{{"a", "b", "c"}, {0.5, 0.3, 0.2}};
    const Sample s(MetricSpace::discrete(), {{0}, {1}}, {"a", "b"});
    const auto e = conditional_missing_mass(mu, s, Radius(0.5));
    CHECK(e.value == doctest::Approx(0.2));
    CHECK(e.method == OracleMethod::analytic);
}

TEST_CASE("one ball covering the support leaves nothing") {
    CHECK(conditional_missing_mass(UniformInterval{0, 1}, line({0.3}), Radius(1.0)).value == 0.0);
    const auto atoms = RealAtoms{{0.0, 2.0}, {0.5, 0.5}};
    CHECK(conditional_missing_mass(atoms, line({1.0}), Radius(2.0)).value == 0.0);
    CHECK(analytic_expected_missing_mass(UniformInterval{0, 1}, 7, Radius(1.0)).value() == doctest::Approx(0.0));
}

TEST_CASE("smoothed oracle edge cases") {
    CHECK(smoothed_oracle_H(UniformInterval{0, 1}, line({0.5}), Radius(0.1)).value == doctest::Approx(1.0));
    const DiscreteDist point{{"a"}, {1.0}};
    const Sample twice(MetricSpace::discrete(), {{0}, {0}}, {"a", "a"});
    CHECK(smoothed_oracle_H(point, twice, Radius(0.5)).value == 0.0);
}

TEST_CASE("sandwich between missing mass and its smoothed version") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto mu = seed % 2 ? DistributionSpec{zipf(15)} : DistributionSpec{UniformInterval{0, 1}};
        const auto s = draw_sample(mu, 5 + seed, seed);
        const Radius r(seed % 2 ? 0.5 : 0.03);
        const double m = conditional_missing_mass(mu, s, r).value;
        const double h = smoothed_oracle_H(mu, s, r).value;
        const double n = static_cast<double>(s.size());
        CHECK(m <= h + 1e-12);
        CHECK(h <= m + 1.0 / n + 1e-12);
    }
}

TEST_CASE("monte carlo and analytic branches agree") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const auto mu = seed % 2 ? DistributionSpec{zipf(30)} : DistributionSpec{UniformInterval{-1, 2}};
        const auto s = draw_sample(mu, 40, seed);
        const Radius r(seed % 2 ? 0.5 : 0.02);
        const auto exact = conditional_missing_mass(mu, s, r);
        const auto mc = conditional_missing_mass(mu, s, r, monte_carlo(50000, seed));
        CHECK(mc.method == OracleMethod::monte_carlo);
        CHECK(mc.half_width == doctest::Approx(hoeffding_half_width(50000, 0.01)));
        CHECK(mc.half_width == doctest::Approx(std::sqrt(std::log(2.0 / 0.01) / 100000.0)));
        CHECK(std::abs(mc.value - exact.value) <= mc.half_width);
        const auto h_exact = smoothed_oracle_H(mu, s, r);
        const auto h_mc = smoothed_oracle_H(mu, s, r, monte_carlo(50000, seed + 100));
        CHECK(std::abs(h_mc.value - h_exact.value) <= h_mc.half_width);
    }
}

TEST_CASE("monte carlo estimates in higher dimension are reproducible") {
    const GaussianMixture mu{{{0, 0}, {2, 2}}, {0.3, 0.7}, 0.5};
    const auto s = draw_sample(mu, 30, 3);
    const auto a = conditional_missing_mass(mu, s, Radius(0.3), monte_carlo(20000, 9));
    const auto b = conditional_missing_mass(mu, s, Radius(0.3), monte_carlo(20000, 9));
    CHECK(a.value == b.value);
    CHECK(a.seed == 9);
    CHECK(a.draws == 20000);
    CHECK(a.value > 0.0);
    CHECK(a.value < 1.0);
}

TEST_CASE("missing mass is antitone in r and under extension") {
    const auto mu = UniformInterval{0, 1};
    const auto s = draw_sample(mu, 60, 5);
    double prev = 2.0;
    for (double r = 0.0; r <= 0.2; r += 0.005) {
        const double v = conditional_missing_mass(mu, s, Radius(r)).value;
        CHECK(v <= prev + 1e-15);
        prev = v;
    }
    prev = 2.0;
    for (std::size_t k = 1; k <= s.size(); ++k) {
        const double v = conditional_missing_mass(mu, s.prefix(k), Radius(0.02)).value;
        CHECK(v <= prev + 1e-15);
        prev = v;
    }
}

TEST_CASE("expected missing mass closed forms") {
    CHECK(analytic_expected_missing_mass(discrete_uniform(2), 1, Radius(0.5)).value() == doctest::Approx(0.5));
    CHECK(analytic_expected_missing_mass(discrete_uniform(1), 1, Radius(0.5)).value() == 0.0);
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto z = zipf(4);
        CHECK(analytic_expected_missing_mass(z, n, Radius(0.5)).value() ==
              doctest::Approx(reference::enumerated_expected_missing_mass(z.weights, n)).epsilon(1e-12));
    }
    // Uniform [0,1], one sample point: the missing mass is 1 - |[x-r, x+r] cap [0,1]|.
    const double r = 0.1;
    const double direct = 1.0 - (2 * r - r * r);
    CHECK(analytic_expected_missing_mass(UniformInterval{0, 1}, 1, Radius(r)).value() == doctest::Approx(direct));
}

TEST_CASE("analytic expected missing mass matches monte carlo replication") {
    struct Case {
        DistributionSpec mu;
        std::size_t n;
        double r;
    };
    const std::vector<Case> cases{{UniformInterval{0, 1}, 20, 0.02},
                                  {UniformInterval{0, 2}, 5, 0.6},
                                  {RealAtoms{{0.0, 0.5, 3.0}, {0.2, 0.3, 0.5}}, 4, 0.6},
                                  {SphereAtom{50, 6, 1.2}, 6, 1.2},
                                  {BasisUniform{20}, 10, 1.2}};
    for (const auto& c : cases) {
        const double exact = analytic_expected_missing_mass(c.mu, c.n, Radius(c.r)).value();
        OracleOptions o;
        o.seed = 4;
        o.test_points = 2000;
        o.force_monte_carlo = true;
        const auto mc = expected_missing_mass(c.mu, c.n, Radius(c.r), 4000, o);
        CHECK(mc.method == OracleMethod::monte_carlo);
        CHECK(std::abs(mc.value - exact) <= mc.half_width);
    }
}

TEST_CASE("exact one dimensional wasserstein distance") {
    CHECK(exact_wasserstein_1d(RealAtoms{{0.3}, {1.0}}, line({0.3})) == 0.0);
    CHECK(exact_wasserstein_1d(RealAtoms{{0.0, 1.0}, {0.5, 0.5}}, line({0.0, 0.0})) == doctest::Approx(0.5));
    CHECK(exact_wasserstein_1d(UniformInterval{0, 1}, line({0.5})) == doctest::Approx(0.25));
    CHECK_THROWS_AS(exact_wasserstein_1d(BasisUniform{3}, draw_sample(BasisUniform{3}, 4, 1)), UnsupportedError);
}

TEST_CASE("wasserstein agrees with the quantile representation") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const DistributionSpec mu = seed % 2 ? DistributionSpec{UniformInterval{-0.5, 1.5}}
                                             : DistributionSpec{RealAtoms{{0.0, 0.4, 2.0}, {0.3, 0.3, 0.4}}};
        const auto s = draw_sample(mu, 3 + 7 * seed, seed);
        std::vector<double> xs;
        for (std::size_t i = 0; i < s.size(); ++i) xs.push_back(s.point(i)[0]);
        CHECK(exact_wasserstein_1d(mu, s) == doctest::Approx(reference::quantile_w1(mu, xs)).epsilon(1e-9));
    }
}

TEST_CASE("wasserstein dominates r times the missing mass") {
    const auto mu = UniformInterval{0, 1};
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto s = draw_sample(mu, 30, seed);
        const double w = exact_wasserstein_1d(mu, s);
        for (double r = 0.005; r < 0.5; r *= 1.5) {
            CHECK(r * conditional_missing_mass(mu, s, Radius(r)).value <= w + 1e-12);
        }
    }
}

TEST_CASE("incompatible distributions are rejected") {
    const auto s = line({0.1, 0.2});
    CHECK_THROWS(require_compatible(BasisUniform{4}, s));
    CHECK_NOTHROW(require_compatible(UniformInterval{0, 1}, s));
}
