#include "vilenkin/characters.hpp"

#include <string>

namespace vilenkin {

CharacterValue rademacher(const GroupSpec& g, int k, const Point& x) {
    require(k >= 0 && k < x.resolution(), ErrorKind::range,
            "r_" + std::to_string(k) + " needs at least " + std::to_string(k + 1) + " digits");
    return g.root(k, static_cast<Nat>(x.digits[static_cast<std::size_t>(k)]));
}

CharacterValue vilenkin_psi(const GroupSpec& g, const NatDigits& n, const Point& x) {
    if (n.value == 0) return {1.0, 0.0};
    require(n.hi < x.resolution(), ErrorKind::shape,
            "psi_n depends on " + std::to_string(n.hi + 1) + " digits but the point has " +
                std::to_string(x.resolution()));
    // Accumulate the phase over a common denominator and look it up once.
    Nat phase = 0;
    for (int k = 0; k <= n.hi; ++k) {
        const auto e = static_cast<Nat>(n.digit(k)) * static_cast<Nat>(x.digits[static_cast<std::size_t>(k)]);
        phase += (e % static_cast<Nat>(g.radix(k))) * g.phase_step(k);
    }
    return g.phase(phase);
}

double walsh(const GroupSpec& g, const NatDigits& n, const Point& x) {
    require(g.dyadic(), ErrorKind::domain,
            "Walsh functions need m = 2 on every level");
    return vilenkin_psi(g, n, x).real();
}

CharacterValue character_at(const GroupSpec& g, int resolution, Nat n, Nat x_index) {
    require(n < g.block(resolution), ErrorKind::shape, "character index beyond grid rank");
    Nat phase = 0;
    for (int k = 0; k < resolution && n != 0; ++k) {
        const Nat m = static_cast<Nat>(g.radix(k));
        phase += ((n % m) * (x_index % m) % m) * g.phase_step(k);
        n /= m;
        x_index /= m;
    }
    return g.phase(phase);
}

} // namespace vilenkin
