#pragma once

#include "vilenkin/group.hpp"

namespace vilenkin {

using CharacterValue = Complex;

/// Generalized Rademacher function r_k(x) = exp(2 pi i x_k / m_k).
CharacterValue rademacher(const GroupSpec& g, int k, const Point& x);

/// Vilenkin character psi_n(x) = prod_k r_k(x)^{n_k}.
CharacterValue vilenkin_psi(const GroupSpec& g, const NatDigits& n, const Point& x);

/// Walsh-Paley function; the group must be dyadic.
double walsh(const GroupSpec& g, const NatDigits& n, const Point& x);

/// psi_n at a flat grid index of the given resolution. Requires n < M_resolution.
CharacterValue character_at(const GroupSpec& g, int resolution, Nat n, Nat x_index);

} // namespace vilenkin
