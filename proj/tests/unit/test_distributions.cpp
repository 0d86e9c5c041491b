#include "missmass/distributions.hpp"
#include "missmass/errors.hpp"
#include "missmass/estimators.hpp"
#include "missmass/stats.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace missmass;

TEST_CASE("point mass discrete distribution") {
    const DiscreteDist d{{"a"}, {1.0}};
    const auto s = draw_sample(d, 5, 11);
    CHECK(s.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(s.labels()[i] == "a");
    CHECK(good_turing(s, Radius(0.5)) == 0.0);
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(validate(DiscreteDist{{"a", "b"}, {0.5, 0.6}}), ArgumentError);
    CHECK_THROWS_AS(validate(DiscreteDist{{"a", "b"}, {1.5, -0.5}}), ArgumentError);
    CHECK_THROWS_AS(validate(DiscreteDist{{"a", "a"}, {0.5, 0.5}}), ArgumentError);
    CHECK_THROWS_AS(validate(UniformInterval{1.0, 1.0}), ArgumentError);
    CHECK_THROWS_AS(validate(BasisUniform{0}), ArgumentError);
    CHECK_THROWS_AS(sample_points(UniformInterval{0, 1}, 0, 1), ArgumentError);
    CHECK_NOTHROW(validate(DiscreteDist{{"a", "b"}, {0.5, 0.5 + 1e-13}}));
}

TEST_CASE("basis vectors are at distance sqrt 2") {
    const auto s = draw_sample(BasisUniform{30}, 20, 4);
    for (std::size_t i = 0; i < s.size(); ++i) {
        double norm = 0.0;
        std::size_t nonzero = 0;
        for (double c : s.point(i)) {
            norm += c * c;
            nonzero += c != 0.0;
        }
        CHECK(norm == 1.0);
        CHECK(nonzero == 1);
        for (std::size_t j = 0; j < s.size(); ++j) {
            const double d = s.distance(i, j);
            CHECK((d == 0.0 || d == doctest::Approx(std::sqrt(2.0))));
        }
    }
}

TEST_CASE("distinct basis draws make good-turing one") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const auto s = draw_sample(BasisUniform{5000}, 10, seed);
        std::set<Point> distinct;
        for (std::size_t i = 0; i < s.size(); ++i) distinct.insert(s.point_copy(i));
        if (distinct.size() == s.size()) CHECK(good_turing(s, Radius(1.2)) == 1.0);
    }
}

TEST_CASE("sphere atom weight and frequency") {
    const SphereAtom spec{40, 8, 1.2};
    const double w = sphere_atom_origin_weight(spec);
    CHECK(w == doctest::Approx(1.0 - std::pow(0.5, 1.0 / 8)));
    CHECK(w == doctest::Approx(0.0830).epsilon(1e-3));
    PointSampler sampler(spec);
    Rng rng(123);
    const std::size_t draws = 200000;
    std::size_t atoms = 0;
    for (std::size_t i = 0; i < draws; ++i) {
        const auto p = sampler.draw(rng);
        bool zero = true;
        for (double c : p) zero = zero && c == 0.0;
        atoms += zero;
    }
    const double freq = static_cast<double>(atoms) / draws;
    CHECK(std::abs(freq - w) <= hoeffding_half_width(draws, 1e-6));
}

TEST_CASE("no atom in a design-size sample with probability one half") {
    const SphereAtom spec{200, 6, 1.2};
    const std::size_t reps = 20000;
    std::size_t clean = 0;
    PointSampler sampler(spec);
    Rng rng(77);
    for (std::size_t r = 0; r < reps; ++r) {
        bool any_atom = false;
        for (std::size_t i = 0; i < spec.n_design; ++i) {
            const auto p = sampler.draw(rng);
            bool zero = true;
            for (double c : p) zero = zero && c == 0.0;
            any_atom = any_atom || zero;
        }
        clean += !any_atom;
    }
    CHECK(std::abs(static_cast<double>(clean) / reps - 0.5) <= hoeffding_half_width(reps, 1e-6));
}

TEST_CASE("adversarial pair hypotheses and dimension") {
    const auto [mu, mu_prime] = adversarial_pair(14, 0.1, 1.2);
    const auto& atom = std::get<SphereAtom>(mu);
    CHECK(atom.dim >= 280);
    CHECK(std::get<BasisUniform>(mu_prime).dim == atom.dim);
    const double nd = 14;
    CHECK(nd * nd / (static_cast<double>(atom.dim) - nd) <= 0.1);
    CHECK(adversarial_dimension(12, 0.125) == 1536);
    CHECK_THROWS_AS(adversarial_pair(14, 1.0, 1.2), ArgumentError);
    CHECK_THROWS_AS(adversarial_pair(14, 0.1, 1.0), ArgumentError);
    CHECK_THROWS_AS(adversarial_pair(14, 0.1, 1.5), ArgumentError);
    CHECK_THROWS_AS(adversarial_pair(5, 0.1, 1.2), ArgumentError);
}

TEST_CASE("indicator process draws non-negative reals") {
    const auto one = indicator_process(2.0, 1, 9);
    REQUIRE(one.size() == 1);
    CHECK(one[0] >= 0.0);
    const auto many = indicator_process(3.0, 20000, 10);
    double sum = 0.0;
    for (double x : many) {
        CHECK(x >= 0.0);
        sum += x;
    }
    CHECK(sum / 20000 == doctest::Approx(1.0).epsilon(0.05));
    CHECK_THROWS_AS(indicator_process(1.0, 5, 1), ArgumentError);
}

TEST_CASE("generators are deterministic under a seed") {
    const std::vector<DistributionSpec> specs{discrete_uniform(7), zipf(9), UniformInterval{-1, 2},
                                              RealAtoms{{0.0, 1.0}, {0.25, 0.75}}, BasisUniform{12},
                                              ScaledIndicatorDist{2.0, 1.0}, LowdimEmbedding{2, 5},
                                              GaussianMixture{{{0, 0}, {3, 3}}, {0.5, 0.5}, 0.4}};
    for (const auto& spec : specs) {
        CHECK(sample_points(spec, 50, 42) == sample_points(spec, 50, 42));
        CHECK(sample_points(spec, 50, 42) != sample_points(spec, 50, 43));
        CHECK(natural_space(spec).point_width() == sample_points(spec, 1, 1).front().size());
    }
}

TEST_CASE("discrete frequencies follow the weights") {
    const auto z = zipf(5);
    double total = 0.0;
    for (std::size_t i = 0; i < 5; ++i) total += 1.0 / static_cast<double>(i + 1);
    for (std::size_t i = 0; i < 5; ++i) CHECK(z.weights[i] == doctest::Approx(1.0 / ((i + 1) * total)));
    const std::size_t count = 100000;
    const auto pts = sample_points(z, count, 8);
    std::vector<double> freq(5, 0.0);
    for (const auto& p : pts) freq[static_cast<std::size_t>(p[0])] += 1.0 / count;
    for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(freq[i] - z.weights[i]) <= hoeffding_half_width(count, 1e-6));
}

TEST_CASE("uniform interval stays inside") {
    for (const auto& p : sample_points(UniformInterval{2.0, 3.0}, 1000, 3)) {
        CHECK(p[0] >= 2.0);
        CHECK(p[0] < 3.0);
    }
}

TEST_CASE("low dimensional embedding spans few coordinates") {
    const auto pts = sample_points(LowdimEmbedding{2, 6}, 200, 5);
    for (const auto& p : pts) {
        CHECK(p.size() == 6);
        for (std::size_t c = 2; c < 6; ++c) CHECK(p[c] == 0.0);
    }
}
