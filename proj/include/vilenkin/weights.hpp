#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "vilenkin/group.hpp"

namespace vilenkin {

enum class Monotonicity { nonincreasing, nondecreasing, general };

std::string_view to_string(Monotonicity m) noexcept;

/// Summation weights q_k with partial sums Q_n = q_0 + ... + q_{n-1}.
///
/// Weights come from an explicit list or a closure over k; closure values are
/// computed on first use and cached. Copies share the cache.
class WeightSequence {
public:
    WeightSequence(std::vector<double> explicit_weights, std::string name = "explicit",
                   Monotonicity declared = Monotonicity::general);
    WeightSequence(std::function<double(Nat)> generator, std::string name,
                   Monotonicity declared = Monotonicity::general);

    static WeightSequence constant(double c = 1.0);
    /// q_0 = 1, q_k = k^{alpha - 1}.
    static WeightSequence power(double alpha);
    /// q_k = A_k^{alpha - 1} (inverse Cesaro weights).
    static WeightSequence cesaro(double alpha);
    /// q_0 = 0, q_k = log^{(beta)}(k^alpha), iterated natural log clamped at 0.
    static WeightSequence iterated_log(double alpha, int beta);
    /// q_k = 1/(k+1).
    static WeightSequence harmonic();

    double q(Nat k) const;
    /// Q_n, accumulated with compensated summation.
    double Q(Nat n) const;

    const std::string& name() const noexcept { return name_; }
    Monotonicity declared() const noexcept { return declared_; }
    /// Checks the declared monotonicity on q_0..q_{n-1}.
    bool verify_monotonicity(Nat n, double tol = 0.0) const;
    /// Stable identity for memo keys.
    std::string key() const;

private:
    struct Cache {
        std::mutex mu;
        std::vector<double> q;
        std::vector<double> Q{0.0};
        double carry = 0.0;
    };
    void extend(Nat n) const;

    std::function<double(Nat)> generator_;
    std::string name_;
    Monotonicity declared_;
    std::shared_ptr<Cache> cache_;
};

/// Table of A_k^alpha = (alpha+1)...(alpha+k)/k!, A_0^alpha = 1.
class CesaroCoeffs {
public:
    CesaroCoeffs(double alpha, Nat n_max);

    double alpha() const noexcept { return alpha_; }
    Nat n_max() const noexcept { return static_cast<Nat>(table_.size()) - 1; }
    double operator()(Nat n) const;

private:
    double alpha_;
    std::vector<double> table_;
};

/// l_n = sum_{k=1}^{n-1} 1/k.
double log_normalizer(Nat n);

} // namespace vilenkin
