#include "doctest.h"

#include <numbers>

#include "oracles.hpp"
#include "vilenkin/characters.hpp"

using namespace vilenkin;

TEST_CASE("rademacher") {
    auto g = make_group({2, 3}, 2);
    CHECK(rademacher(g, 0, Point{{0, 2}}) == Complex(1.0, 0.0));
    CHECK(rademacher(g, 0, Point{{1, 0}}) == Complex(-1.0, 0.0));
    const auto r = rademacher(g, 1, Point{{0, 1}});
    CHECK(std::abs(r - std::polar(1.0, 2.0 * std::numbers::pi / 3.0)) < 1e-15);
    CHECK_THROWS_AS(rademacher(g, 2, Point{{0, 1}}), Error);
}

TEST_CASE("vilenkin and walsh functions") {
    auto w = make_group({2}, 4);
    CHECK(vilenkin_psi(w, digits_of(0, w), Point{{1, 1, 0}}) == Complex(1.0, 0.0));
    CHECK(vilenkin_psi(w, digits_of(3, w), Point{{1, 1}}) == Complex(1.0, 0.0));
    auto t = make_group({3}, 3);
    const auto v = vilenkin_psi(t, digits_of(1, t), Point{{2, 0}});
    CHECK(std::abs(v - std::polar(1.0, 4.0 * std::numbers::pi / 3.0)) < 1e-15);
    CHECK_THROWS_AS(vilenkin_psi(t, digits_of(9, t), Point{{2, 0}}), Error);

    CHECK(walsh(w, digits_of(1, w), Point{{1, 0, 0}}) == -1.0);
    CHECK(walsh(w, digits_of(1, w), Point{{0, 1, 0}}) == 1.0);
    CHECK(walsh(w, digits_of(5, w), Point{{1, 0, 1}}) == 1.0);
    for (Nat n = 0; n < 16; ++n) CHECK(walsh(w, digits_of(n, w), Point{{0, 0, 0, 0}}) == 1.0);
    try {
        walsh(t, digits_of(1, t), Point{{1}});
        FAIL("walsh on a ternary group");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::domain);
    }
}

TEST_CASE("character properties at resolution 3") {
    for (auto g : {make_group({2}, 3), make_group({3}, 3), make_group({2, 3, 4}, 3)}) {
        const Nat size = g.block(3);
        for (Nat n = 0; n < size; ++n) {
            const auto nd = digits_of(n, g);
            for (Nat a = 0; a < size; ++a) {
                const auto x = point_at(g, 3, a);
                const auto px = vilenkin_psi(g, nd, x);
                REQUIRE(std::abs(std::abs(px) - 1.0) < 1e-12);
                REQUIRE(std::abs(px - oracle::psi(g, 3, n, a)) < 1e-12);
                REQUIRE(std::abs(character_at(g, 3, n, a) - px) < 1e-12);
                REQUIRE(std::abs(vilenkin_psi(g, nd, group_neg(g, x)) - std::conj(px)) < 1e-12);
                for (Nat b = 0; b < size; ++b) {
                    const auto y = point_at(g, 3, b);
                    REQUIRE(std::abs(vilenkin_psi(g, nd, group_add(g, x, y)) - px * vilenkin_psi(g, nd, y)) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("orthonormality and coset constancy") {
    for (auto g : {make_group({2}, 8), make_group({3}, 5), make_group({2, 3, 4}, 4)}) {
        int N = 1;
        while (N < g.levels() && g.block(N + 1) <= 256) ++N;
        const Nat size = g.block(N);
        for (Nat a = 0; a < size; ++a)
            for (Nat b = 0; b < size; ++b) {
                Complex s{};
                for (Nat x = 0; x < size; ++x) s += character_at(g, N, a, x) * std::conj(character_at(g, N, b, x));
                s /= static_cast<double>(size);
                REQUIRE(std::abs(s - Complex(a == b ? 1.0 : 0.0)) < 1e-10);
            }
        for (Nat n = 1; n < size; ++n) {
            const int r = digits_of(n, g).hi + 1;
            for (Nat x = 0; x < size; ++x)
                REQUIRE(std::abs(character_at(g, N, n, x) - character_at(g, N, n, x % g.block(r))) < 1e-12);
        }
    }
}
