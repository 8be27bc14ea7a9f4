#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "vilenkin/group.hpp"

namespace vilenkin {

/// A function on G_m that is constant on the cosets I_N(x); values are stored
/// by flat index sum x_j M_j.
class GridFunction {
public:
    GridFunction(GroupSpec group, int resolution, std::vector<Complex> values);

    static GridFunction zeros(const GroupSpec& group, int resolution);
    static GridFunction constant(const GroupSpec& group, int resolution, Complex c);
    static GridFunction from_index(const GroupSpec& group, int resolution,
                                   const std::function<Complex(Nat)>& fn);

    const GroupSpec& group() const noexcept { return group_; }
    int resolution() const noexcept { return resolution_; }
    Nat size() const noexcept { return static_cast<Nat>(values_.size()); }
    std::span<const Complex> values() const noexcept { return values_; }
    Complex operator[](Nat i) const { return values_[i]; }

    /// Haar integral (1/M_N) sum f.
    Complex integral() const;
    /// Same function written at a finer resolution.
    GridFunction refine(int resolution) const;
    /// f(x - h) for a grid index h.
    GridFunction shifted(Nat h) const;
    GridFunction abs() const;
    GridFunction conj() const;

    GridFunction& operator+=(const GridFunction& other);
    GridFunction& operator-=(const GridFunction& other);
    GridFunction& operator*=(Complex c);
    /// Pointwise product.
    GridFunction& operator*=(const GridFunction& other);

private:
    void check_same(const GridFunction& other) const;

    GroupSpec group_;
    int resolution_;
    std::vector<Complex> values_;
};

GridFunction operator+(GridFunction a, const GridFunction& b);
GridFunction operator-(GridFunction a, const GridFunction& b);
GridFunction operator*(GridFunction a, Complex c);
GridFunction operator*(Complex c, GridFunction a);
GridFunction operator*(GridFunction a, const GridFunction& b);

/// Bring two functions to the finer of their resolutions.
void align(GridFunction& a, GridFunction& b);
double max_abs_diff(const GridFunction& a, const GridFunction& b);

/// Fourier coefficients f^(0..M_N-1).
struct Spectrum {
    GroupSpec group;
    int resolution = 0;
    std::vector<Complex> coeffs;
};

/// Direct sum (1/M_N) sum_x f(x) conj(psi_n(x)); zero for n >= M_N.
Complex fourier_coeff(const GridFunction& f, Nat n);

/// Mixed-radix transform: one length-m_k DFT per digit, stages in order k = 0..N-1.
Spectrum transform_forward(const GridFunction& f);
GridFunction transform_inverse(const Spectrum& s);

/// S_n f; n may be at most M_N.
GridFunction partial_sum(const GridFunction& f, Nat n);
/// Inverse transform of f^(k) * multiplier[k]; the multiplier has M_N entries.
GridFunction apply_multiplier(const GridFunction& f, std::span<const Complex> multiplier);
GridFunction apply_multiplier(const GridFunction& f, std::span<const double> multiplier);
/// (f * g)(x) = integral of f(x - t) g(t) dt.
GridFunction convolve(const GridFunction& f, const GridFunction& g);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

double lp_norm(const GridFunction& f, double p);
/// sup_t t mu(|f| > t)^{1/p}, found exactly among the values of |f|.
double weak_lp(const GridFunction& f, double p);

/// E_n f: coset averages over I_n, kept at the resolution of f.
GridFunction conditional_expectation(const GridFunction& f, int n);
/// E_n f written at resolution n.
GridFunction coarsen(const GridFunction& f, int n);

} // namespace vilenkin
