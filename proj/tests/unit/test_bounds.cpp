#include "missmass/bounds.hpp"
#include "missmass/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace missmass;

TEST_CASE("variance of G") {
    CHECK(variance_bound_G(1, 100).value == doctest::Approx(0.04));
    const auto at16 = variance_bound_G(1, 16);
    CHECK(at16.value == doctest::Approx(0.25));
    CHECK(at16.vacuous);
    CHECK(at16.warnings.empty());
    CHECK(variance_bound_G(4, 1000).value == doctest::Approx(0.01));
    CHECK_FALSE(variance_bound_G(4, 1000).vacuous);
    const auto small = variance_bound_G(1, 10);
    CHECK(small.warnings.size() == 1);
    CHECK(small.value == doctest::Approx(0.4));
}

TEST_CASE("variance of the missing mass") {
    CHECK(variance_bound_Mhat(1, 101).value == doctest::Approx(0.1813).epsilon(1e-3));
    CHECK(variance_bound_Mhat(1, 1000000).value == doctest::Approx(4.46e-5).epsilon(2e-3));
    CHECK_THROWS_AS(variance_bound_Mhat(0.0, 100), ArgumentError);
    CHECK_THROWS_AS(variance_bound_Mhat(1, 1), ArgumentError);
}

TEST_CASE("tail of G") {
    const auto a = tail_bound_G(1, 100, 1);
    CHECK(a.value == doctest::Approx(3.997).epsilon(1e-3));
    CHECK(a.vacuous);
    const auto b = tail_bound_G(1, 1000000, 5);
    CHECK(b.value == doctest::Approx(0.1529).epsilon(1e-3));
    CHECK(*b.probability == doctest::Approx(0.101).epsilon(1e-2));
    CHECK_FALSE(b.vacuous);
    const auto c = tail_bound_G(1, 1000000, 1e-12);
    CHECK(c.value < 1e-4);
    CHECK(*c.probability == 1.0);
    CHECK_THROWS_AS(tail_bound_G(1, 100, 0.0), ArgumentError);
}

TEST_CASE("tail of the missing mass") {
    const auto a = tail_bound_Mhat(1, 1000000, 20);
    CHECK(a.value == doctest::Approx(0.7937).epsilon(1e-3));
    CHECK(*a.probability == doctest::Approx(4.1e-3).epsilon(2e-2));
    CHECK_FALSE(a.vacuous);
    CHECK(*tail_bound_Mhat(1, 100, 1e-9).probability == 1.0);
    const auto c = tail_bound_Mhat(1, 100, 1);
    CHECK(c.vacuous);
    CHECK(*c.raw_probability == doctest::Approx(200 * std::exp(-1.0)));
}

TEST_CASE("good-turing error bounds") {
    auto [v3, l3] = gt_error_bounds(3);
    CHECK(v3.value == doctest::Approx(1.0));
    CHECK(l3.value == doctest::Approx(1.5275).epsilon(1e-4));
    CHECK(v3.vacuous);
    CHECK(l3.vacuous);
    auto [v700, l700] = gt_error_bounds(700);
    CHECK(v700.value == doctest::Approx(0.004286).epsilon(1e-3));
    CHECK(l700.value == doctest::Approx(0.1));
    CHECK(gt_error_bounds(7).second.value == doctest::Approx(1.0));
}

TEST_CASE("martingale bounds") {
    CHECK(*martingale_tail_bound(50, 0.2).probability == doctest::Approx(std::exp(-1.0)));
    CHECK(*martingale_relative_tail_bound(100, 0.1).probability ==
          doctest::Approx(std::exp(-10.0 / (4 * (std::exp(1.0) - 2)))));
    CHECK(martingale_bias_bound(100, 50).value == doctest::Approx(std::log(2.0)));
    CHECK_THROWS_AS(martingale_bias_bound(100, 100), ArgumentError);
}

TEST_CASE("bounds are monotone in n, E_h and t") {
    for (double eh : {1.0, 1.5, 3.0, 7.0}) {
        for (std::size_t n : {16u, 40u, 100u, 1000u}) {
            for (double t : {0.1, 1.0, 4.0}) {
                const double k = 1.7;
                const auto big_n = static_cast<std::size_t>(n * 3);
                CHECK(variance_bound_G(eh, big_n).value < variance_bound_G(eh, n).value);
                CHECK(variance_bound_Mhat(eh, big_n).value < variance_bound_Mhat(eh, n).value);
                CHECK(tail_bound_G(eh, big_n, t).value < tail_bound_G(eh, n, t).value);
                CHECK(tail_bound_Mhat(eh, big_n, t).value < tail_bound_Mhat(eh, n, t).value);
                CHECK(variance_bound_G(eh * k, n).value > variance_bound_G(eh, n).value);
                CHECK(variance_bound_Mhat(eh * k, n).value > variance_bound_Mhat(eh, n).value);
                CHECK(tail_bound_G(eh * k, n, t).value > tail_bound_G(eh, n, t).value);
                CHECK(tail_bound_Mhat(eh * k, n, t).value > tail_bound_Mhat(eh, n, t).value);
                CHECK(tail_bound_G(eh, n, t * k).value > tail_bound_G(eh, n, t).value);
                CHECK(tail_bound_Mhat(eh, n, t * k).value > tail_bound_Mhat(eh, n, t).value);
            }
        }
    }
}

TEST_CASE("reports are reproducible and echo inputs") {
    const auto a = tail_bound_Mhat(2.5, 333, 1.25);
    const auto b = tail_bound_Mhat(2.5, 333, 1.25);
    CHECK(a.value == b.value);
    CHECK(*a.probability == *b.probability);
    CHECK(a.inputs == b.inputs);
    CHECK(a.inputs.at("E_h") == 2.5);
    CHECK(a.inputs.at("n") == 333.0);
    CHECK(a.inputs.at("t") == 1.25);
    CHECK(a.kind == BoundKind::tail_Mhat);
}
