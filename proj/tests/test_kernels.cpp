#include "doctest.h"

#include <thread>

#include "oracles.hpp"
#include "vilenkin/kernels.hpp"

using namespace vilenkin;

namespace {

GridFunction average_of_dirichlet(const GroupSpec& g, Nat n, int N, const std::function<double(Nat)>& c) {
    auto acc = GridFunction::zeros(g, N);
    for (Nat k = 1; k <= n; ++k) acc += oracle::dirichlet(g, k, N) * Complex(c(k));
    return acc;
}

} // namespace

TEST_CASE("Dirichlet kernel values") {
    auto w = make_group({2}, 5);
    const auto d3 = dirichlet(w, 3, 2);
    CHECK(std::vector<Complex>(d3.values().begin(), d3.values().end()) == std::vector<Complex>{3.0, 1.0, 1.0, -1.0});
    const auto d1 = dirichlet(w, 1, 3);
    for (auto v : d1.values()) CHECK(v == Complex(1.0));
    const auto d0 = dirichlet(w, 0, 3);
    for (auto v : d0.values()) CHECK(v == Complex());
    for (int n = 0; n <= 3; ++n) {
        const auto d = dirichlet(w, w.block(n), 3);
        for (Nat x = 0; x < 8; ++x) CHECK(d[x] == Complex(x % w.block(n) == 0 ? static_cast<double>(w.block(n)) : 0.0));
    }
    try {
        dirichlet(w, 5, 2);
        FAIL("rank too small accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::shape);
    }
}

TEST_CASE("closed forms agree with direct sums") {
    for (auto g : {make_group({2}, 7), make_group({3}, 5), make_group({2, 3, 4}, 4), make_group({3, 2}, 4)}) {
        int N = g.levels();
        while (g.block(N) > 256) --N;
        for (Nat n = 1; n <= g.block(N); ++n) {
            const auto oracle_d = oracle::dirichlet(g, n, N);
            REQUIRE(max_abs_diff(dirichlet(g, n, N), oracle_d) < 1e-10);
            REQUIRE(max_abs_diff(dirichlet_direct(g, n, N), oracle_d) < 1e-10);
            if (n > 40) continue;
            const double inv = 1.0 / static_cast<double>(n);
            const auto k = average_of_dirichlet(g, n, N, [inv](Nat) { return inv; });
            REQUIRE(max_abs_diff(fejer(g, n, N), k) < 1e-10);
            REQUIRE(max_abs_diff(fejer_direct(g, n, N), k) < 1e-10);
        }
    }
}

TEST_CASE("Fejer kernel at powers") {
    auto w = make_group({2}, 4);
    const auto k2 = fejer(w, 2, 2);
    CHECK(k2[0] == Complex(1.5));
    CHECK(k2[2] == Complex(1.5));
    CHECK(std::abs(k2[1] - Complex(0.5)) < 1e-15);
    CHECK(std::abs(k2[3] - Complex(0.5)) < 1e-15);
    const auto k1 = fejer(w, 1, 3);
    for (auto v : k1.values()) CHECK(v == Complex(1.0));
    auto g = make_group({3, 2}, 2);
    CHECK(max_abs_diff(fejer_power(g, 1, 2), fejer_direct(g, 3, 2)) < 1e-12);
    for (auto h : {make_group({2}, 6), make_group({3}, 4), make_group({2, 3, 4}, 4)}) {
        for (int n = 0; n <= 3; ++n) {
            REQUIRE(max_abs_diff(fejer_power(h, n, 4), fejer_direct(h, h.block(n), 4)) < 1e-10);
            if (n == 3) continue;
            for (int s = 1; s < h.radix(n); ++s)
                REQUIRE(max_abs_diff(fejer_block(h, n, s, 4), fejer_direct(h, s * h.block(n), 4)) < 1e-10);
        }
    }
}

TEST_CASE("weighted kernels") {
    auto w = make_group({2}, 4);
    const auto one = WeightSequence::constant();
    for (Nat n = 1; n <= 16; ++n) CHECK(max_abs_diff(norlund_kernel(one, w, n, 4), fejer(w, n, 4)) < 1e-12);
    const auto a1 = norlund_kernel(WeightSequence::harmonic(), w, 1, 3);
    for (auto v : a1.values()) CHECK(v == Complex(1.0));
    const auto p = WeightSequence::power(0.5);
    const auto f4 = average_of_dirichlet(w, 3, 3, [&](Nat k) { return p.q(k) / p.Q(4); });
    CHECK(max_abs_diff(tmean_kernel(p, w, 4, 3), f4) < 1e-12);
    const auto a5 = average_of_dirichlet(w, 5, 3, [&](Nat k) { return p.q(5 - k) / p.Q(5); });
    CHECK(max_abs_diff(norlund_kernel(p, w, 5, 3), a5) < 1e-12);
    try {
        norlund_kernel(WeightSequence(std::vector<double>{0.0, 1.0}), w, 2, 2);
        FAIL("q_0 = 0 accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::degenerate_weights);
    }
    const auto y2 = riesz_log_kernel(w, 2, 2);
    for (auto v : y2.values()) CHECK(std::abs(v - Complex(1.0)) < 1e-15);
    const double l4 = 11.0 / 6.0;
    const auto y4 = average_of_dirichlet(w, 3, 2, [&](Nat k) { return 1.0 / (static_cast<double>(k) * l4); });
    CHECK(max_abs_diff(riesz_log_kernel(w, 4, 2), y4) < 1e-12);
    const auto p5 = average_of_dirichlet(w, 4, 3, [&](Nat k) { return 1.0 / (static_cast<double>(5 - k) * log_normalizer(5)); });
    CHECK(max_abs_diff(norlund_log_kernel(w, 5, 3), p5) < 1e-12);
    try {
        riesz_log_kernel(w, 1, 2);
        FAIL("n < 2 accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::range);
    }
}

TEST_CASE("Dirichlet identities") {
    for (auto g : {make_group({2}, 6), make_group({3}, 4), make_group({2, 3, 4}, 4)}) {
        const int N = 4;
        for (int n = 0; n < 3; ++n) {
            const Nat M = g.block(n);
            const auto dM = dirichlet(g, M, N);
            const auto rn = GridFunction::from_index(g, N, [&](Nat x) { return g.root(n, (x / M) % static_cast<Nat>(g.radix(n))); });
            for (Nat j = 0; j <= static_cast<Nat>(g.radix(n) - 1) * M; ++j)
                REQUIRE(max_abs_diff(dirichlet(g, j + M, N), dM + rn * dirichlet(g, j, N)) < 1e-12);
            const auto psi = GridFunction::from_index(g, N, [&](Nat x) { return oracle::psi(g, N, M - 1, x); });
            for (Nat j = 0; j <= M; ++j)
                REQUIRE(max_abs_diff(dirichlet(g, M - j, N), dM - psi * dirichlet(g, j, N).conj()) < 1e-12);
            for (int s = 1; s < g.radix(n); ++s) {
                auto geo = GridFunction::zeros(g, N);
                auto pw = GridFunction::constant(g, N, 1.0);
                for (int k = 0; k < s; ++k) {
                    geo += pw;
                    pw *= rn;
                }
                REQUIRE(max_abs_diff(dirichlet(g, s * M, N), dM * geo) < 1e-12);
            }
        }
    }
}

TEST_CASE("Lebesgue constants") {
    auto w = make_group({2}, 12);
    CHECK(lebesgue_constant(w, 1) == 1.0);
    CHECK(lebesgue_constant(w, 3) == 1.5);
    for (auto g : {make_group({2}, 12), make_group({3}, 8), make_group({2, 3, 4}, 6)})
        for (int n = 0; n <= 5; ++n) CHECK(std::abs(lebesgue_constant(g, g.block(n)) - 1.0) < 1e-12);
    const auto b3 = lebesgue_bounds(w, 3);
    CHECK(b3.lower == 0.25);
    CHECK(b3.upper == 2.0);
    const auto b1 = lebesgue_bounds(w, 1, VariationConvention::literal);
    CHECK(b1.lower == 0.125);
    CHECK(b1.upper == 1.0);
    CHECK(lebesgue_bounds(w, 1).upper == 2.0);
    // The literal v undershoots L_62 = 31/16.
    CHECK(lebesgue_constant(w, 62) == doctest::Approx(1.9375).epsilon(1e-14));
    CHECK(lebesgue_bounds(w, 62, VariationConvention::literal).upper == 1.0);
    CHECK(lebesgue_bounds(w, 62).upper == 2.0);
    // D_n values at resolution |n|+1 against the oracle norm.
    auto g = make_group({2, 3, 4}, 4);
    for (Nat n = 1; n < 24; ++n) {
        const auto d = oracle::dirichlet(g, n, digits_of(n, g).hi + 1);
        REQUIRE(std::abs(lebesgue_constant(g, n) - lp_norm(d, 1.0)) < 1e-12);
    }
}

TEST_CASE("alternating block sums and their Lebesgue constants") {
    auto w = make_group({2}, 12);
    CHECK(alternating_block_sum(w, 0) == 1);
    CHECK(alternating_block_sum(w, 2) == 21);
    for (auto g : {make_group({2}, 12), make_group({3}, 8), make_group({2, 3, 4}, 8)})
        for (int k = 2; k <= 3; ++k) {
            const double L = lebesgue_constant(g, alternating_block_sum(g, k));
            REQUIRE(L >= k / (2.0 * g.lambda()) - 1e-12);
            REQUIRE(L <= g.lambda() * k + 1e-12);
        }
}

TEST_CASE("kernel lemma records") {
    auto w = make_group({2}, 8);
    const auto recs = kernel_lemma_bounds(w, 64, 4, 1e-10);
    bool star1 = false, fn5 = false, kn100 = false;
    for (const auto& r : recs) {
        INFO(r.claim);
        if (r.kind == RecordKind::check) CHECK(r.pass);
        star1 |= r.claim == "lemma222.star1";
        fn5 |= r.claim == "lemma7kn.ratio" && std::isfinite(r.value);
        kn100 |= r.claim == "lemma6kn.lower";
    }
    CHECK(star1);
    CHECK(fn5);
    CHECK(kn100);
    // Walsh K_{M_2} at e_1 + e_2 against M_2 / (2 pi).
    const std::vector<int> x{0, 1, 1};
    CHECK(std::abs(fejer_at(w, 4, x)) == doctest::Approx(1.0));
    CHECK(std::abs(fejer_at(w, 4, x)) >= 4.0 / (2.0 * std::numbers::pi));
}

TEST_CASE("kernel memo under concurrent readers") {
    KernelMemo memo;
    auto g = make_group({2, 3}, 6);
    std::vector<std::thread> pool;
    std::vector<double> seen(8);
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&, t] {
            for (Nat n = 1; n <= 20; ++n) {
                auto k = memo.get(KernelKind::fejer, g, n, 4);
                if (n == 20) seen[static_cast<std::size_t>(t)] = std::abs((*k)[3]);
            }
        });
    for (auto& th : pool) th.join();
    CHECK(memo.size() == 20);
    for (double v : seen) CHECK(v == seen[0]);
    const auto q = WeightSequence::power(0.5);
    CHECK(memo.get(KernelKind::tmean, g, 5, 4, &q) == memo.get(KernelKind::tmean, g, 5, 4, &q));
    CHECK_THROWS_AS(memo.get(KernelKind::norlund, g, 5, 4), Error);
}
