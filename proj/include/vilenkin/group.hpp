#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "vilenkin/error.hpp"

namespace vilenkin {

using Nat = std::uint64_t;
using Complex = std::complex<double>;

/**
 * A bounded Vilenkin group truncated to a finite number of levels.
 *
 * Holds the radix sequence m_0..m_{L-1}, the generalized number system
 * M_0 = 1, M_{k+1} = m_k M_k and the bound lambda = max m_k. Immutable once
 * built; a table of unit roots exp(2 pi i j / D), D = lcm of the radices, is
 * precomputed so that every character value is a single table lookup.
 */
class GroupSpec {
public:
    /// Uses the radix list as given, one radix per level.
    explicit GroupSpec(std::vector<int> radices);

    int levels() const noexcept { return static_cast<int>(radices_.size()); }
    int radix(int k) const;
    /// M_k for 0 <= k <= levels().
    Nat block(int k) const;
    int lambda() const noexcept { return lambda_; }
    bool dyadic() const noexcept { return lambda_ == 2; }

    std::span<const int> radices() const noexcept { return radices_; }
    std::span<const Nat> blocks() const noexcept { return blocks_; }

    /// exp(2 pi i e / m_k), exact for the quarter-turn values.
    Complex root(int k, Nat e) const;
    /// Common denominator of all radix phases.
    Nat phase_denominator() const noexcept { return phase_den_; }
    /// exp(2 pi i num / phase_denominator()).
    Complex phase(Nat num) const noexcept { return (*phase_table_)[num % phase_den_]; }
    /// phase_denominator() / m_k.
    Nat phase_step(int k) const { return phase_den_ / static_cast<Nat>(radix(k)); }

    /// Same radices on the first `resolution` levels.
    bool compatible(const GroupSpec& other, int resolution) const noexcept;

    bool operator==(const GroupSpec& other) const noexcept { return radices_ == other.radices_; }

private:
    std::vector<int> radices_;
    std::vector<Nat> blocks_;
    int lambda_ = 0;
    Nat phase_den_ = 1;
    std::shared_ptr<const std::vector<Complex>> phase_table_;
};

/// Builds a group with `levels` levels; a shorter radix list repeats cyclically.
GroupSpec make_group(std::span<const int> radices, int levels);
inline GroupSpec make_group(std::initializer_list<int> radices, int levels) {
    return make_group(std::span<const int>(radices.begin(), radices.size()), levels);
}

/// A point of G_m known to `resolution` digits (a rank-N coset representative).
struct Point {
    std::vector<int> digits;

    int resolution() const noexcept { return static_cast<int>(digits.size()); }
    bool operator==(const Point&) const = default;
};

/// Flat grid index of a point: sum x_j M_j.
Nat index_of(const GroupSpec& g, const Point& x);
Point point_at(const GroupSpec& g, int resolution, Nat index);

Point group_add(const GroupSpec& g, const Point& x, const Point& y);
Point group_sub(const GroupSpec& g, const Point& x, const Point& y);
Point group_neg(const GroupSpec& g, const Point& x);

/// Digitwise modular sum/difference on flat indices at a given resolution.
Nat index_add(const GroupSpec& g, int resolution, Nat a, Nat b);
Nat index_sub(const GroupSpec& g, int resolution, Nat a, Nat b);

/// sum_k x_k / M_{k+1}; lies in [0, 1).
double point_norm(const GroupSpec& g, const Point& x);
/// sum_k |x_k - y_k| / M_{k+1}.
double point_distance(const GroupSpec& g, const Point& x, const Point& y);

/// Natural number with its digits in the generalized number system.
struct NatDigits {
    Nat value = 0;
    std::vector<int> digits; // one per level of the group
    int hi = 0;              // |n|, highest nonzero digit position
    int lo = 0;              // <n>, lowest nonzero digit position

    int rho() const noexcept { return hi - lo; }
    int digit(int j) const noexcept {
        return j >= 0 && j < static_cast<int>(digits.size()) ? digits[static_cast<std::size_t>(j)] : 0;
    }
};

NatDigits digits_of(Nat n, const GroupSpec& g);
Nat from_digits(std::span<const int> digits, const GroupSpec& g);

/// Digitwise sum/difference of two naturals, reassembled with weights M_i.
Nat nat_hat_add(Nat n, Nat k, const GroupSpec& g);
Nat nat_hat_sub(Nat n, Nat k, const GroupSpec& g);

/// How the digit-variation sum is indexed. `literal` starts the |delta_{j+1} - delta_j|
/// sum at j = 1; `from_zero` starts it at j = 0.
enum class VariationConvention { literal, from_zero };

int variation_v(const NatDigits& n, VariationConvention convention = VariationConvention::literal);
int variation_vstar(const NatDigits& n, const GroupSpec& g);
/// Walsh-Paley variation sum |n_{j+1} - n_j| + n_0 over binary digits.
int walsh_variation(const NatDigits& n, VariationConvention convention = VariationConvention::literal);

/// The set I_N^{k,l} of the partition of the complement of I_N (k < l <= N).
struct ShellDescriptor {
    int k = 0;
    int l = 0;
    bool operator==(const ShellDescriptor&) const = default;
};

std::vector<ShellDescriptor> coset_partition(const GroupSpec& g, int resolution);
bool shell_contains(const ShellDescriptor& shell, const Point& x);
std::vector<Nat> shell_indices(const GroupSpec& g, int resolution, const ShellDescriptor& shell);
/// Grid indices of I_s \ I_{s+1} at the given resolution.
std::vector<Nat> annulus_indices(const GroupSpec& g, int resolution, int s);
/// Grid indices of the coset I_n(x) at the given resolution.
std::vector<Nat> coset_indices(const GroupSpec& g, int resolution, int n, const Point& x);
/// First nonzero digit position below `resolution`, or `resolution` for points of I_N.
int first_nonzero(const Point& x) noexcept;

} // namespace vilenkin
