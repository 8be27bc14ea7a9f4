#include "doctest.h"

#include "oracles.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/means.hpp"

using namespace vilenkin;

namespace {

// sum_k w_k S_k f with S_k from the oracle partial sums.
GridFunction direct_mean(const GridFunction& f, const std::function<double(Nat)>& w, Nat lo, Nat hi) {
    auto acc = GridFunction::zeros(f.group(), f.resolution());
    for (Nat k = lo; k <= hi; ++k) acc += oracle::partial_sum(f, k) * Complex(w(k));
    return acc;
}

std::vector<MeanSpec> all_specs() {
    return {MeanSpec::partial_sums(), MeanSpec::fejer(), MeanSpec::cesaro(0.5), MeanSpec::cesaro(1.0),
            MeanSpec::u(0.5), MeanSpec::v(0.5), MeanSpec::riesz_log(), MeanSpec::norlund_log(),
            MeanSpec::norlund(WeightSequence::harmonic()), MeanSpec::tmean(WeightSequence::harmonic()),
            MeanSpec::tmean(WeightSequence::iterated_log(1.0, 1))};
}

} // namespace

TEST_CASE("Fejer means") {
    auto w = make_group({2}, 4);
    const auto f = oracle::random_function(w, 3, 21);
    const auto c = GridFunction::constant(w, 3, {2.0, -1.0});
    for (Nat n = 1; n <= 8; ++n) CHECK(max_abs_diff(fejer_mean(c, n), c) < 1e-14);
    CHECK(max_abs_diff(fejer_mean(f, 1), GridFunction::constant(w, 3, f.integral())) < 1e-14);
    CHECK(max_abs_diff(fejer_mean(f, 5), direct_mean(f, [](Nat) { return 0.2; }, 1, 5)) < 1e-12);
    CHECK_THROWS_AS(fejer_mean(f, 9), Error);
    CHECK_THROWS_AS(fejer_mean(f, 0), Error);
}

TEST_CASE("Cesaro, U and V means") {
    auto w = make_group({2}, 4);
    const auto f = oracle::random_function(w, 3, 22);
    CHECK(max_abs_diff(u_mean(f, 1, 0.5), GridFunction::zeros(w, 3)) == 0.0);
    CesaroCoeffs A(0.5, 8), B(-0.5, 8);
    CHECK(max_abs_diff(cesaro_mean(f, 6, 0.5), direct_mean(f, [&](Nat k) { return B(6 - k) / A(6); }, 1, 6)) < 1e-12);
    CHECK(max_abs_diff(u_mean(f, 4, 0.5), direct_mean(f, [&](Nat k) { return B(k) / A(4); }, 1, 3)) < 1e-12);
    const auto q = WeightSequence::power(0.5);
    CHECK(max_abs_diff(v_mean(f, 4, 0.5), direct_mean(f, [&](Nat k) { return q.q(k) / q.Q(4); }, 1, 3)) < 1e-12);
    // Constants: V_n c = c (Q_n - q_0) / Q_n.
    const auto c = GridFunction::constant(w, 3, 3.0);
    for (Nat n = 1; n <= 8; ++n) CHECK(std::abs(v_mean(c, n, 0.5)[0] - 3.0 * (q.Q(n) - 1.0) / q.Q(n)) < 1e-14);
    // (C, alpha) as defined drops the k = 0 term: sigma_n^alpha c = c (1 - A_n^{alpha-1} / A_n^alpha).
    CesaroCoeffs A4(0.25, 7), B4(-0.75, 7);
    CHECK(std::abs(cesaro_mean(c, 7, 0.25)[0] - 3.0 * (1.0 - B4(7) / A4(7))) < 1e-13);
    CHECK_THROWS_AS(cesaro_mean(f, 4, 1.5), Error);
}

TEST_CASE("logarithmic means") {
    auto w = make_group({2}, 4);
    const auto f = oracle::random_function(w, 3, 23);
    CHECK(max_abs_diff(riesz_log_mean(f, 2), partial_sum(f, 1)) < 1e-14);
    const auto c = GridFunction::constant(w, 3, -2.0);
    for (Nat n = 2; n <= 8; ++n) {
        CHECK(max_abs_diff(riesz_log_mean(c, n), c) < 1e-13);
        CHECK(max_abs_diff(norlund_log_mean(c, n), c) < 1e-13);
    }
    const double l6 = log_normalizer(6);
    CHECK(max_abs_diff(norlund_log_mean(f, 6), direct_mean(f, [&](Nat k) { return 1.0 / ((6.0 - k) * l6); }, 1, 5)) < 1e-12);
    CHECK_THROWS_AS(riesz_log_mean(f, 1), Error);

    // S_i of D_{M_{2k}+1} - D_{M_{2k}} is D_i - D_{M_{2k}} on M_{2k} < i <= M_{2k}+1.
    auto g = make_group({2}, 6);
    const Nat M = g.block(2);
    const auto h = dirichlet(g, M + 1, 4) - dirichlet(g, M, 4);
    for (Nat i = M + 1; i <= M + 1; ++i)
        CHECK(max_abs_diff(partial_sum(h, i), dirichlet(g, i, 4) - dirichlet(g, M, 4)) < 1e-12);
    const auto L = norlund_log_mean(h, M + 2);
    const auto expect = h * Complex(1.0 / log_normalizer(M + 2));
    CHECK(max_abs_diff(L, expect) < 1e-12);
}

TEST_CASE("Norlund and T means") {
    auto w = make_group({2}, 4);
    const auto f = oracle::random_function(w, 3, 24);
    const auto one = WeightSequence::constant();
    for (Nat n = 1; n <= 8; ++n) CHECK(max_abs_diff(norlund_mean(f, n, one), fejer_mean(f, n)) == 0.0);
    CHECK(max_abs_diff(norlund_mean(f, 1, WeightSequence::harmonic()), partial_sum(f, 1)) < 1e-14);
    const auto lg = WeightSequence([](Nat k) { return std::log(static_cast<double>(k) + 1.0); }, "log(k+1)",
                                   Monotonicity::nondecreasing);
    const Nat n = 6;
    const auto direct = t_mean(f, n, lg);
    auto abel = GridFunction::zeros(w, 3);
    for (Nat j = 1; j + 1 < n; ++j)
        abel += fejer_mean(f, j) * Complex((lg.q(j) - lg.q(j + 1)) * static_cast<double>(j));
    abel += fejer_mean(f, n - 1) * Complex(lg.q(n - 1) * static_cast<double>(n - 1));
    abel *= Complex(1.0 / lg.Q(n));
    CHECK(max_abs_diff(direct, abel) < 1e-10);
    CHECK_THROWS_AS(norlund_mean(f, 3, WeightSequence(std::vector<double>{0.0, 0.0, 0.0, 0.0})), Error);
}

TEST_CASE("every mean is a convolution with its kernel") {
    for (auto g : {make_group({2}, 6), make_group({2, 3, 4}, 3)}) {
        const int N = 3;
        const auto f = oracle::random_function(g, N, 25);
        for (const auto& spec : all_specs())
            for (Nat n = 2; n <= g.block(N); n += 3) {
                if (spec.weights && spec.weights->Q(n) == 0.0) continue;
                INFO(to_string(spec.kind), " n=", n);
                REQUIRE(max_abs_diff(apply_mean(f, spec, n), convolve(f, mean_kernel(spec, g, n, N))) < 1e-10);
            }
    }
}

TEST_CASE("regularity report") {
    const auto r1 = regularity_report(WeightSequence::constant(), 32);
    for (const auto& row : r1.rows) CHECK(row.ratio == doctest::Approx(1.0 / static_cast<double>(row.n)));
    CHECK(r1.envelope);
    const auto rp = regularity_report(WeightSequence::power(0.5), 512);
    CHECK(rp.rows.back().ratio < rp.rows[10].ratio);
    CHECK(rp.rows.back().ratio < 0.01);
    CHECK(rp.envelope);
    const auto rl = regularity_report(WeightSequence::iterated_log(1.0, 1), 512);
    CHECK(rl.monotone);
    CHECK(rl.rows.back().scaled < 1.5);
}

TEST_CASE("maximal operators") {
    auto w = make_group({2}, 5);
    const auto f = oracle::random_function(w, 4, 26);
    const auto idx = power_indices(w, 4);
    const auto s = weighted_maximal(f, MeanSpec::partial_sums(), idx);
    for (Nat x = 0; x < f.size(); ++x) CHECK(s[x].real() >= std::abs(f[x]) - 1e-14);
    const auto c = GridFunction::constant(w, 4, 1.5);
    std::vector<Nat> all(16);
    for (Nat n = 1; n <= 16; ++n) all[n - 1] = n;
    const auto sc = weighted_maximal(c, MeanSpec::fejer(), all);
    for (auto v : sc.values()) CHECK(std::abs(v - Complex(1.5)) < 1e-13);
    const double p = 0.4;
    auto weight = [p](Nat n) { return std::pow(static_cast<double>(n + 1), 1.0 / p - 2.0); };
    std::vector<Nat> r8{1, 2, 3, 4, 5, 6, 7, 8};
    const auto m = weighted_maximal(f, MeanSpec::fejer(), r8, weight);
    for (Nat x = 0; x < f.size(); ++x) {
        double best = 0.0;
        for (Nat n : r8) best = std::max(best, std::abs(direct_mean(f, [n](Nat) { return 1.0 / static_cast<double>(n); }, 1, n)[x]) / weight(n));
        REQUIRE(std::abs(m[x].real() - best) < 1e-12);
    }
    CHECK_THROWS_AS(weighted_maximal(f, MeanSpec::fejer(), std::vector<Nat>{}), Error);
}
