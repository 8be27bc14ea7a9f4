#include "doctest.h"

#include "oracles.hpp"
#include "vilenkin/characters.hpp"
#include "vilenkin/hardy.hpp"
#include "vilenkin/kernels.hpp"

using namespace vilenkin;

namespace {

GridFunction character(const GroupSpec& g, int N, Nat n) {
    return GridFunction::from_index(g, N, [&](Nat x) { return character_at(g, N, n, x); });
}

} // namespace

TEST_CASE("martingale construction and maximal function") {
    auto w = make_group({2}, 5);
    const auto f = oracle::random_function(w, 4, 31);
    const auto single = StepMartingale(w, {4}, {f});
    CHECK(max_abs_diff(maximal_function(single), f.abs()) == 0.0);
    CHECK(hardy_quasinorm(single, 0.5) == doctest::Approx(lp_norm(f, 0.5)));

    const auto m = regular_martingale(f);
    CHECK(m.size() == 5);
    const auto fs = maximal_function(m);
    for (Nat x = 0; x < 16; ++x) {
        double best = 0.0;
        for (int n = 0; n <= 4; ++n) {
            Complex avg{};
            for (Nat y = 0; y < 16; ++y)
                if (y % w.block(n) == x % w.block(n)) avg += f[y];
            best = std::max(best, std::abs(avg / static_cast<double>(16 / w.block(n))));
        }
        REQUIRE(std::abs(fs[x].real() - best) < 1e-13);
    }
    // Entries nondecreasing in n (a martingale with that property is constant): the sup is the last entry.
    const auto inc = GridFunction::constant(w, 2, 4.0);
    const auto mi = regular_martingale(inc);
    CHECK(max_abs_diff(maximal_function(mi), inc) < 1e-14);

    CHECK_THROWS_AS(StepMartingale(w, {1, 2}, {oracle::random_function(w, 1, 1), oracle::random_function(w, 2, 2)}), Error);
    CHECK_THROWS_AS(StepMartingale(w, {2, 1}, {oracle::random_function(w, 2, 1), oracle::random_function(w, 1, 2)}), Error);
}

TEST_CASE("martingale law for the constructors") {
    for (auto g : {make_group({2}, 8), make_group({2, 3, 4}, 5)}) {
        const auto f = oracle::random_function(g, 4, 32);
        const auto m = regular_martingale(f);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j)
                REQUIRE(max_abs_diff(coarsen(m.entries()[j], m.levels()[i]), m.entries()[i]) < 1e-13);
        REQUIRE(max_abs_diff(partial_sum(f, g.block(4)), f) < 1e-12);
        const auto t = tail_martingale(f, 2);
        for (int k = 0; k <= 2; ++k) REQUIRE(lp_norm(t.entries()[static_cast<std::size_t>(k)], kInfinity) == 0.0);
        REQUIRE(max_abs_diff(t.finest(), f - partial_sum(f, g.block(2))) < 1e-12);
    }
}

TEST_CASE("modulus of continuity") {
    auto w = make_group({2}, 4);
    const auto p1 = character(w, 3, 1);
    for (double p : {0.5, 1.0, 2.0}) {
        CHECK(modulus(p1, p, 1) == 0.0);
        CHECK(modulus(p1, p, 0) == doctest::Approx(2.0));
    }
    auto g = make_group({2, 3, 4}, 4);
    const auto f = oracle::random_function(g, 4, 33);
    double prev = kInfinity;
    for (int n = 0; n <= 4; ++n) {
        const double om = modulus(f, 1.0, n);
        CHECK(om <= prev + 1e-15);
        prev = om;
    }
    CHECK(modulus(f, 2.0, 4) == 0.0);
}

TEST_CASE("Watari bracket") {
    for (auto g : {make_group({2}, 6), make_group({3}, 4), make_group({2, 3, 4}, 4)}) {
        for (unsigned seed = 0; seed < 20; ++seed) {
            const int N = 4;
            const auto f = oracle::random_function(g, N, 300 + seed);
            for (double p : {1.0, 2.0})
                for (int n = 0; n <= N; ++n) {
                    const double om = modulus(f, p, n);
                    const double tail = lp_norm(f - partial_sum(f, g.block(n)), p);
                    REQUIRE(0.5 * om <= tail + 1e-10);
                    REQUIRE(tail <= om + 1e-10);
                }
        }
    }
}

TEST_CASE("H_p modulus through the tail martingale") {
    auto w = make_group({2}, 5);
    const auto f = oracle::random_function(w, 4, 34);
    const auto m = regular_martingale(f);
    CHECK(modulus_hp(m, 1.0, 4) == 0.0);
    CHECK(modulus_hp(m, 1.0, 2) >= lp_norm(f - partial_sum(f, 4), 1.0) - 1e-12);
}

TEST_CASE("best approximation") {
    auto w = make_group({2}, 4);
    const auto f = oracle::random_function(w, 3, 35);
    CHECK(best_approx_l2(f, 8) == 0.0);
    CHECK(best_approx_l2(character(w, 3, 5), 4) == doctest::Approx(1.0));
    CHECK(best_approx_l2(character(w, 3, 5), 6) == doctest::Approx(0.0));
    // Two-point grid: the best constant is found by a fine search and must sit in the bracket.
    auto h = GridFunction(w, 1, {Complex(0.3), Complex(-1.1)});
    double best = kInfinity;
    for (int i = -3000; i <= 3000; ++i) {
        const double c = i * 1e-3;
        best = std::min(best, 0.5 * (std::abs(h[0] - c) + std::abs(h[1] - c)));
    }
    const auto b = best_approx_bounds(h, 1.0, 1);
    CHECK(b.lower <= best + 1e-12);
    CHECK(best <= b.upper + 1e-12);
    try {
        best_approx_bounds(f, 1.0, 3);
        FAIL("general n accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::unsupported);
    }
}

TEST_CASE("atoms") {
    auto w = make_group({2}, 5);
    const int N = 3;
    const auto a = character(w, N + 1, w.block(N)) * dirichlet(w, w.block(N), N + 1);
    const Coset I{N, Point{{0, 0, 0}}};
    for (double p : {0.25, 0.5, 1.0}) {
        const auto atom = make_atom(p, I, a);
        CHECK(lp_norm(atom.values, kInfinity) == 8.0);
        const auto m = regular_martingale(atom.values);
        CHECK(hardy_quasinorm(m, p) <= 1.0 + 1e-10);
    }
    const auto bump = GridFunction::from_index(w, 2, [](Nat x) { return Complex(x == 0 ? 1.0 : 0.0); });
    try {
        make_atom(1.0, Coset{2, Point{{0, 0}}}, bump);
        FAIL("mean");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::atom_mean);
    }
    const auto big = character(w, 2, 2) * dirichlet(w, 2, 2) * Complex(2.0);
    try {
        make_atom(1.0, Coset{1, Point{{0}}}, big);
        FAIL("bound");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::atom_bound);
    }
    try {
        make_atom(1.0, Coset{2, Point{{0, 0}}}, character(w, 2, 1));
        FAIL("support");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::atom_support);
    }
}

TEST_CASE("atomic martingales") {
    auto w = make_group({2}, 6);
    const auto a1 = make_atom(1.0, Coset{1, Point{{0}}}, dirichlet(w, 4, 2) - dirichlet(w, 2, 2));
    const auto one = atom_martingale({{1.0, a1}});
    for (std::size_t i = 0; i < one.mart.size(); ++i)
        CHECK(max_abs_diff(one.mart.entries()[i], coarsen(a1.values, one.mart.levels()[i])) < 1e-14);
    CHECK(one.lambda_p_sum == 1.0);
    // Disjoint supports add.
    const auto left = GridFunction::from_index(w, 3, [](Nat x) { return Complex(x == 0 ? 4.0 : x == 4 ? -4.0 : 0.0); });
    const auto right = GridFunction::from_index(w, 3, [](Nat x) { return Complex(x == 1 ? 4.0 : x == 5 ? -4.0 : 0.0); });
    const auto al = make_atom(0.5, Coset{2, Point{{0, 0}}}, left);
    const auto ar = make_atom(0.5, Coset{2, Point{{1, 0}}}, right);
    const auto both = atom_martingale({{0.5, al}, {0.25, ar}});
    CHECK(max_abs_diff(both.mart.finest(), left * Complex(0.5) + right * Complex(0.25)) < 1e-15);
    CHECK(both.lambda_p_sum == doctest::Approx(std::sqrt(0.5) + 0.5));
}

TEST_CASE("counterexample martingales") {
    auto w = make_group({2}, 10);
    const auto sp = counterexample(w, CounterexampleKind::strong_partial_sums, {{1, 2, 3}, 1.0, 8});
    CHECK(sp.mart.levels().back() == 8);
    const auto c = transform_forward(sp.mart.finest());
    for (std::size_t k = 0; k < 3; ++k) {
        const Nat M = w.block(static_cast<int>(k) + 1);
        const double lam = std::sqrt(default_phi(2.0 * M) / std::log(static_cast<double>(M)));
        CHECK(sp.lambdas[k] == doctest::Approx(lam));
        for (Nat j = M; j < 2 * M; ++j) REQUIRE(std::abs(c.coeffs[j] - lam) < 1e-12);
    }
    CHECK(std::abs(c.coeffs[0]) < 1e-12);
    CHECK(std::abs(c.coeffs[16]) < 1e-12);
    for (const auto& r : sp.records)
        if (r.kind == RecordKind::check) CHECK(r.pass);

    const auto sf = counterexample(w, CounterexampleKind::strong_fejer, {{1, 2}, 0.5, 0});
    const auto cf = transform_forward(sf.mart.finest());
    for (std::size_t k = 0; k < 2; ++k) {
        const Nat M = w.block(static_cast<int>(k) + 1);
        for (Nat j = M; j < 2 * M; ++j) REQUIRE(std::abs(cf.coeffs[j] - static_cast<double>(M) * sf.lambdas[k]) < 1e-12);
    }

    auto g = make_group({2, 3, 4}, 6);
    const auto hp = counterexample(g, CounterexampleKind::hp_blocks, {{1, 3}, 0.4, 0});
    const auto ch = transform_forward(hp.mart.finest());
    for (int a : {1, 3})
        for (Nat j = g.block(a); j < g.block(a + 1); ++j)
            REQUIRE(std::abs(ch.coeffs[j] - std::pow(static_cast<double>(g.block(a)), 1.5) / a) < 1e-9);
    CHECK(hp.records.front().pass);

    for (std::vector<int> bad : {std::vector<int>{}, std::vector<int>{2, 1}, std::vector<int>{1, 1}}) {
        try {
            counterexample(w, CounterexampleKind::hp_blocks, {bad, 0.4, 0});
            FAIL("bad alpha accepted");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::invalid_params);
        }
    }
}
