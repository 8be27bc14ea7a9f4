#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vilenkin/record.hpp"
#include "vilenkin/spectral.hpp"

namespace vilenkin {

/// Finite martingale f^(n_0), f^(n_1), ... with f^(n_i) of rank n_i and
/// E_{n_i} f^(n_j) = f^(n_i) for i < j.
class StepMartingale {
public:
    StepMartingale(GroupSpec group, std::vector<int> levels, std::vector<GridFunction> entries, double tol = 1e-10);

    const GroupSpec& group() const noexcept { return group_; }
    const std::vector<int>& levels() const noexcept { return levels_; }
    const std::vector<GridFunction>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const GridFunction& finest() const { return entries_.back(); }

private:
    GroupSpec group_;
    std::vector<int> levels_;
    std::vector<GridFunction> entries_;
};

/// (E_0 f, E_1 f, ..., E_N f) for a rank-N function, or the given subset of levels.
StepMartingale regular_martingale(const GridFunction& f, std::vector<int> levels = {});

/// The martingale f - S_{M_n} f: zero up to level n, f^(k) - f^(n) above.
StepMartingale tail_martingale(const GridFunction& f, int n);

/// f* = sup_n |f^(n)| at the finest resolution.
GridFunction maximal_function(const StepMartingale& mart);
/// ||f*||_p.
double hardy_quasinorm(const StepMartingale& mart, double p);

/// omega_p(1/M_n, f) = sup over h in I_n of ||f(. - h) - f||_p.
double modulus(const GridFunction& f, double p, int n);
/// ||f - S_{M_n} f||_{H_p} through the tail martingale of the finest entry.
double modulus_hp(const StepMartingale& mart, double p, int n);

/// E_n(f, L_2) = (sum_{k >= n} |f^(k)|^2)^{1/2}.
double best_approx_l2(const GridFunction& f, Nat n);

struct Bracket {
    double lower = 0.0;
    double upper = 0.0;
};

/// For n = M_j: (1/2)||f - S_n f||_p <= E_n(f, L_p) <= ||f - S_n f||_p. p = 2 gives the exact value twice.
Bracket best_approx_bounds(const GridFunction& f, double p, Nat n);

/// The coset I_K(x): points agreeing with x on digits 0..K-1.
struct Coset {
    int rank = 0;
    Point anchor;
};

bool coset_contains(const Coset& c, const Point& x);

struct Atom {
    double p = 1.0;
    Coset support;
    GridFunction values;
};

/// Validates the three atom conditions; each violation has its own error kind.
Atom make_atom(double p, Coset support, GridFunction values, double tol = 1e-12);

struct AtomicMartingale {
    StepMartingale mart;
    /// sum |lambda_k|^p, the upper-bound surrogate for ||f||_{H_p}^p.
    double lambda_p_sum = 0.0;
};

/// f^(n) = sum_k lambda_k S_{M_n} a_k on levels 0..N, N the finest atom resolution.
AtomicMartingale atom_martingale(const std::vector<std::pair<double, Atom>>& coeffs);

enum class CounterexampleKind { strong_partial_sums, strong_fejer, hp_blocks };

std::string_view to_string(CounterexampleKind kind) noexcept;
CounterexampleKind counterexample_kind_from_string(std::string_view name);

struct CounterexampleParams {
    std::vector<int> alpha;
    /// Atom exponent for hp-blocks; the other kinds use p = 1 and p = 1/2.
    double p = 0.4;
    /// Resolution of the finest entry; 0 picks the smallest rank holding every block.
    int rank = 0;
};

struct Counterexample {
    CounterexampleKind kind;
    CounterexampleParams params;
    StepMartingale mart;
    std::vector<double> lambdas;
    /// Expected f^(j) on the block of each alpha_k.
    std::vector<double> block_values;
    double lambda_p_sum = 0.0;
    /// Spectrum check plus the reported gap conditions.
    std::vector<VerificationRecord> records;
};

/// phi(n) = max(1, log log n), the growth function used by the strong-sum examples.
double default_phi(double n);

Counterexample counterexample(const GroupSpec& g, CounterexampleKind kind, const CounterexampleParams& params);

/// First and one-past-last spectral index of the block carried by alpha.
std::pair<Nat, Nat> counterexample_block(const GroupSpec& g, CounterexampleKind kind, int alpha);

} // namespace vilenkin
