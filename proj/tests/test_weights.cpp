#include "doctest.h"

#include <cmath>

#include "vilenkin/weights.hpp"

using namespace vilenkin;

TEST_CASE("weight sequences") {
    auto one = WeightSequence::constant();
    CHECK(one.Q(5) == 5.0);
    CHECK(one.verify_monotonicity(100));
    auto p = WeightSequence::power(0.5);
    CHECK(p.q(0) == 1.0);
    CHECK(p.q(4) == doctest::Approx(0.5));
    CHECK(p.Q(3) == doctest::Approx(1.0 + 1.0 + std::sqrt(0.5)));
    CHECK(p.declared() == Monotonicity::nonincreasing);
    CHECK(p.verify_monotonicity(200));
    auto c = WeightSequence::cesaro(0.5);
    CHECK(c.q(0) == 1.0);
    CHECK(c.q(2) == doctest::Approx(0.375));
    CHECK(c.verify_monotonicity(100));
    auto l = WeightSequence::iterated_log(1.0, 1);
    CHECK(l.q(0) == 0.0);
    CHECK(l.q(10) == doctest::Approx(std::log(10.0)));
    CHECK(l.verify_monotonicity(100));
    CHECK_FALSE(WeightSequence(std::vector<double>{1.0, 2.0}, "up", Monotonicity::nonincreasing).verify_monotonicity(2));
    try {
        WeightSequence(std::vector<double>{1.0, -1.0});
        FAIL("negative weight accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::degenerate_weights);
    }
}

TEST_CASE("Cesaro numbers") {
    CesaroCoeffs a1(1.0, 10);
    for (Nat n = 0; n <= 10; ++n) CHECK(a1(n) == doctest::Approx(static_cast<double>(n + 1)));
    CesaroCoeffs h(0.5, 10);
    CHECK(h(2) == doctest::Approx(15.0 / 8.0));
    CHECK(h(0) == 1.0);
    CHECK_THROWS_AS(h(11), Error);
    try {
        CesaroCoeffs(-2.0, 5);
        FAIL("negative integer alpha accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::domain);
    }
    for (double alpha : {0.25, 0.5, 1.0}) {
        CesaroCoeffs A(alpha, 64);
        CesaroCoeffs B(alpha - 1.0, 64);
        for (Nat n = 1; n <= 64; ++n) {
            REQUIRE(std::abs(A(n) - A(n - 1) - B(n)) < 1e-10);
            double s = 0.0;
            for (Nat k = 0; k <= n; ++k) s += B(n - k);
            REQUIRE(std::abs(A(n) - s) < 1e-10);
            REQUIRE(A(n) > 0.0);
        }
    }
}

TEST_CASE("log normalizer") {
    CHECK(log_normalizer(1) == 0.0);
    CHECK(log_normalizer(2) == 1.0);
    CHECK(log_normalizer(4) == doctest::Approx(11.0 / 6.0));
}
