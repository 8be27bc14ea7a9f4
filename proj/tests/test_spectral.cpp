#include "doctest.h"

#include "oracles.hpp"
#include "vilenkin/characters.hpp"
#include "vilenkin/spectral.hpp"

using namespace vilenkin;

namespace {

GridFunction character(const GroupSpec& g, int N, Nat n) {
    return GridFunction::from_index(g, N, [&](Nat x) { return character_at(g, N, n, x); });
}

} // namespace

TEST_CASE("GridFunction validates its size") {
    auto g = make_group({2}, 3);
    try {
        GridFunction(g, 2, std::vector<Complex>(3));
        FAIL("accepted wrong length");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::shape);
    }
}

TEST_CASE("fourier coefficients") {
    auto w = make_group({2}, 3);
    const auto f = character(w, 3, 5);
    for (Nat k = 0; k < 8; ++k) CHECK(std::abs(fourier_coeff(f, k) - Complex(k == 5 ? 1.0 : 0.0)) < 1e-14);
    CHECK(fourier_coeff(GridFunction::constant(w, 3, {2.5, -1.0}), 0) == Complex(2.5, -1.0));
    const auto r = oracle::random_function(make_group({2, 3, 4}, 3), 3, 11);
    CHECK(fourier_coeff(r, 25) == Complex{});
    CHECK(fourier_coeff(r, 24) == Complex{});
}

TEST_CASE("fast transform against the naive transform") {
    for (auto g : {make_group({2}, 8), make_group({3}, 5), make_group({2, 3, 4}, 4), make_group({2, 3}, 2)}) {
        for (int N = 0; N <= g.levels() && g.block(N) <= 256; ++N) {
            const auto f = oracle::random_function(g, N, 100 + static_cast<unsigned>(N));
            const auto s = transform_forward(f);
            const auto naive = oracle::transform(f);
            for (Nat k = 0; k < f.size(); ++k) REQUIRE(std::abs(s.coeffs[k] - naive[k]) < 1e-10);
            for (Nat k = 0; k < f.size(); k += 7) REQUIRE(std::abs(s.coeffs[k] - fourier_coeff(f, k)) < 1e-10);
        }
    }
}

TEST_CASE("delta at zero transforms to ones") {
    auto g = make_group({2, 3, 4}, 3);
    std::vector<Complex> v(24);
    v[0] = 24.0;
    const auto s = transform_forward(GridFunction(g, 3, v));
    for (auto c : s.coeffs) CHECK(std::abs(c - Complex(1.0)) < 1e-13);
}

TEST_CASE("round trip and Plancherel") {
    for (auto g : {make_group({2}, 12), make_group({3}, 7), make_group({2, 3, 4}, 6)}) {
        int N = g.levels();
        while (g.block(N) > 4096) --N;
        for (unsigned seed = 0; seed < 10; ++seed) {
            const auto f = oracle::random_function(g, N, seed);
            const auto s = transform_forward(f);
            REQUIRE(max_abs_diff(transform_inverse(s), f) < 1e-12);
            double energy = 0.0, coeff = 0.0;
            for (auto v : f.values()) energy += std::norm(v);
            for (auto c : s.coeffs) coeff += std::norm(c);
            REQUIRE(std::abs(energy / static_cast<double>(f.size()) - coeff) < 1e-10);
        }
    }
}

TEST_CASE("partial sums") {
    auto w = make_group({2}, 4);
    const auto f = oracle::random_function(w, 3, 3);
    CHECK(max_abs_diff(partial_sum(f, 8), f) == 0.0);
    CHECK(max_abs_diff(partial_sum(f, 0), GridFunction::zeros(w, 3)) == 0.0);
    for (Nat j = 0; j < 8; ++j)
        for (Nat n = 0; n <= 8; ++n) {
            const auto p = character(w, 3, j);
            const auto expect = j < n ? p : GridFunction::zeros(w, 3);
            REQUIRE(max_abs_diff(partial_sum(p, n), expect) < 1e-13);
        }
    // f^ = (1, 1, 1, 0, ...) gives D_3.
    const auto d3 = character(w, 2, 0) + character(w, 2, 1) + character(w, 2, 2);
    CHECK(max_abs_diff(partial_sum(d3, 3), oracle::dirichlet(w, 3, 2)) < 1e-13);
    try {
        partial_sum(f, 9);
        FAIL("n > M_N accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::range);
    }
    auto g = make_group({2, 3, 4}, 3);
    const auto r = oracle::random_function(g, 3, 4);
    for (Nat n : {1, 5, 13, 24}) CHECK(max_abs_diff(partial_sum(r, n), oracle::partial_sum(r, n)) < 1e-10);
    for (Nat n : {0, 1, 5, 13, 24})
        CHECK(max_abs_diff(partial_sum(r, n), convolve(r, oracle::dirichlet(g, n, 3))) < 1e-10);
}

TEST_CASE("convolution") {
    auto g = make_group({2, 3, 4}, 3);
    const auto f = oracle::random_function(g, 3, 8);
    std::vector<Complex> delta(24);
    delta[0] = 24.0;
    CHECK(max_abs_diff(convolve(f, GridFunction(g, 3, delta)), f) < 1e-12);
    for (Nat a = 0; a < 24; a += 5)
        for (Nat b = 0; b < 24; b += 3) {
            const auto c = convolve(character(g, 3, a), character(g, 3, b));
            const auto expect = a == b ? character(g, 3, a) : GridFunction::zeros(g, 3);
            REQUIRE(max_abs_diff(c, expect) < 1e-12);
        }
    const auto h = oracle::random_function(g, 3, 9);
    CHECK(max_abs_diff(convolve(f, h), oracle::convolve(f, h)) < 1e-12);
    CHECK_THROWS_AS(convolve(f, oracle::random_function(g, 2, 1)), Error);
}

TEST_CASE("norms") {
    auto w = make_group({2}, 4);
    const auto one = GridFunction::constant(w, 3, 1.0);
    for (double p : {0.3, 1.0, 2.0, 7.5, kInfinity}) CHECK(lp_norm(one, p) == doctest::Approx(1.0));
    const double c = 3.0;
    const auto ind = GridFunction::from_index(w, 1, [&](Nat x) { return x == 0 ? Complex(c) : Complex(); });
    for (double p : {0.4, 1.0, 2.0}) {
        CHECK(lp_norm(ind, p) == doctest::Approx(c * std::pow(0.5, 1.0 / p)));
        CHECK(weak_lp(ind, p) == doctest::Approx(c * std::pow(0.5, 1.0 / p)));
    }
    CHECK_THROWS_AS(lp_norm(one, 0.0), Error);
    CHECK_THROWS_AS(weak_lp(one, -1.0), Error);
    auto g = make_group({2, 3, 4}, 3);
    for (unsigned seed = 0; seed < 20; ++seed) {
        const auto f = oracle::random_function(g, 3, seed);
        for (double p : {0.5, 1.0, 2.0}) {
            // Threshold scan oracle: every level t = |f(x)| with the measure of {|f| >= t}.
            double best = 0.0;
            for (auto v : f.values()) {
                const double t = std::abs(v);
                double cnt = 0.0;
                for (auto u : f.values()) cnt += std::abs(u) >= t ? 1.0 : 0.0;
                best = std::max(best, t * std::pow(cnt / 24.0, 1.0 / p));
            }
            REQUIRE(weak_lp(f, p) == doctest::Approx(best).epsilon(1e-12));
            REQUIRE(weak_lp(f, p) <= lp_norm(f, p) + 1e-12);
        }
    }
}

TEST_CASE("conditional expectation") {
    auto w = make_group({2}, 4);
    const auto f = oracle::random_function(w, 3, 1);
    CHECK(max_abs_diff(conditional_expectation(f, 3), f) == 0.0);
    const auto e0 = conditional_expectation(f, 0);
    for (auto v : e0.values()) CHECK(std::abs(v - f.integral()) < 1e-14);
    const auto e1 = conditional_expectation(f, 1);
    for (Nat x = 0; x < 8; ++x) {
        Complex avg{};
        for (Nat y = 0; y < 8; ++y)
            if (y % 2 == x % 2) avg += f[y];
        CHECK(std::abs(e1[x] - avg / 4.0) < 1e-14);
    }
    for (int n = 0; n <= 3; ++n) CHECK(max_abs_diff(conditional_expectation(f, n), partial_sum(f, w.block(n))) < 1e-10);
}
