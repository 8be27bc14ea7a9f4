#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "vilenkin/record.hpp"
#include "vilenkin/spectral.hpp"
#include "vilenkin/weights.hpp"

namespace vilenkin {

enum class KernelKind { dirichlet, fejer, norlund, tmean, riesz_log, norlund_log };

std::string_view to_string(KernelKind kind) noexcept;
KernelKind kernel_kind_from_string(std::string_view name);

/// Kernels are returned at resolution N and need n <= M_N (D_n is then
/// constant on the cosets I_N(x)).

/// D_n by the closed form psi_n sum_j D_{M_j} sum_{k=m_j-n_j}^{m_j-1} r_j^k.
GridFunction dirichlet(const GroupSpec& g, Nat n, int N);
/// D_n = sum_{k<n} psi_k, one character at a time.
GridFunction dirichlet_direct(const GroupSpec& g, Nat n, int N);

/// K_n = (1/n) sum_{k=1}^n D_k through the digit decomposition of n.
GridFunction fejer(const GroupSpec& g, Nat n, int N);
/// K_n as the literal average of D_1..D_n.
GridFunction fejer_direct(const GroupSpec& g, Nat n, int N);
/// K_{M_n} from its three-case closed form; requires n <= N.
GridFunction fejer_power(const GroupSpec& g, int n, int N);
/// K_{s M_n} from K_{M_n} and D_{M_n}; 1 <= s < m_n.
GridFunction fejer_block(const GroupSpec& g, int n, int s, int N);

/// A_n = (1/Q_n) sum_{k=1}^n q_{n-k} D_k.
GridFunction norlund_kernel(const WeightSequence& q, const GroupSpec& g, Nat n, int N);
/// F_n = (1/Q_n) sum_{k=1}^{n-1} q_k D_k, so that T_n f = f * F_n.
GridFunction tmean_kernel(const WeightSequence& q, const GroupSpec& g, Nat n, int N);
/// Y_n = (1/l_n) sum_{k=1}^{n-1} D_k / k.
GridFunction riesz_log_kernel(const GroupSpec& g, Nat n, int N);
/// P_n = (1/l_n) sum_{k=1}^{n-1} D_k / (n-k).
GridFunction norlund_log_kernel(const GroupSpec& g, Nat n, int N);

/// sum_{k=1}^n c(k) D_k by running sums of characters.
GridFunction dirichlet_combination(const GroupSpec& g, Nat n, int N, const std::function<double(Nat)>& c);

/// Pointwise closed forms on a point given by its digits (missing digits are 0).
Complex dirichlet_at(const GroupSpec& g, Nat n, std::span<const int> x);
Complex fejer_at(const GroupSpec& g, Nat n, std::span<const int> x);
Complex fejer_power_at(const GroupSpec& g, int n, std::span<const int> x);
Complex fejer_block_at(const GroupSpec& g, int n, int s, std::span<const int> x);

/// ||D_n||_1 evaluated at resolution |n| + 1.
double lebesgue_constant(const GroupSpec& g, Nat n);

struct LebesgueBounds {
    int v = 0;
    int vstar = 0;
    double lower = 0.0;
    double upper = 0.0;
};

/// (1/(4 lambda)) v + v* / lambda^2 <= L_n <= v + v*. The upper side fails for
/// the literal v (Walsh n = 62: v = 1, L_n = 31/16), so v is summed from j = 0 by default.
LebesgueBounds lebesgue_bounds(const GroupSpec& g, Nat n,
                               VariationConvention convention = VariationConvention::from_zero);

/// M_{2k} + M_{2k-2} + ... + M_2 + M_0.
Nat alternating_block_sum(const GroupSpec& g, int k);

/// Pointwise lemma checks for the kernels at resolution N, n ranging over 1..n_max.
std::vector<VerificationRecord> kernel_lemma_bounds(const GroupSpec& g, Nat n_max, int N, double tol);

/// Thread-safe cache of kernel grids. Many readers, one writer at a time.
class KernelMemo {
public:
    using Key = std::tuple<KernelKind, Nat, int, std::string>;

    std::shared_ptr<const GridFunction> get(KernelKind kind, const GroupSpec& g, Nat n, int N,
                                            const WeightSequence* q = nullptr);
    std::size_t size() const;
    void clear();

private:
    mutable std::shared_mutex mu_;
    std::map<Key, std::shared_ptr<const GridFunction>> entries_;
};

/// Direct-sum kernel of the given kind; weights are required for norlund and tmean.
GridFunction make_kernel(KernelKind kind, const GroupSpec& g, Nat n, int N, const WeightSequence* q = nullptr);

} // namespace vilenkin
