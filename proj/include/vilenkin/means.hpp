#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "vilenkin/record.hpp"
#include "vilenkin/spectral.hpp"
#include "vilenkin/weights.hpp"

namespace vilenkin {

enum class MeanKind { partial_sum, fejer, cesaro, u, v, riesz_log, norlund_log, norlund, tmean };

std::string_view to_string(MeanKind kind) noexcept;
MeanKind mean_kind_from_string(std::string_view name);

/// Which mean, plus alpha for the Cesaro family and weights for the Norlund and T means.
struct MeanSpec {
    MeanKind kind = MeanKind::fejer;
    double alpha = 1.0;
    std::optional<WeightSequence> weights;

    static MeanSpec partial_sums() { return {MeanKind::partial_sum, 1.0, std::nullopt}; }
    static MeanSpec fejer() { return {MeanKind::fejer, 1.0, std::nullopt}; }
    static MeanSpec cesaro(double alpha) { return {MeanKind::cesaro, alpha, std::nullopt}; }
    static MeanSpec u(double alpha) { return {MeanKind::u, alpha, std::nullopt}; }
    static MeanSpec v(double alpha) { return {MeanKind::v, alpha, WeightSequence::power(alpha)}; }
    static MeanSpec riesz_log() { return {MeanKind::riesz_log, 1.0, std::nullopt}; }
    static MeanSpec norlund_log() { return {MeanKind::norlund_log, 1.0, std::nullopt}; }
    static MeanSpec norlund(WeightSequence q) { return {MeanKind::norlund, 1.0, std::move(q)}; }
    static MeanSpec tmean(WeightSequence q) { return {MeanKind::tmean, 1.0, std::move(q)}; }
};

/// Coefficients w_k, k = 0..n, with mean_n f = sum_k w_k S_k f (w_0 multiplies S_0 f = 0).
std::vector<double> partial_sum_weights(const MeanSpec& spec, Nat n);

/// Fourier multiplier of mean_n: entry j is sum_{k > j} w_k, zero for j >= n; length `size`.
std::vector<double> mean_multiplier(const MeanSpec& spec, Nat n, Nat size);

/// mean_n f through the spectrum.
GridFunction apply_mean(const GridFunction& f, const MeanSpec& spec, Nat n);

/// Kernel of mean_n built from Dirichlet kernels (direct sums, no transform).
GridFunction mean_kernel(const MeanSpec& spec, const GroupSpec& g, Nat n, int N);

GridFunction fejer_mean(const GridFunction& f, Nat n);
GridFunction cesaro_mean(const GridFunction& f, Nat n, double alpha);
GridFunction u_mean(const GridFunction& f, Nat n, double alpha);
GridFunction v_mean(const GridFunction& f, Nat n, double alpha);
GridFunction riesz_log_mean(const GridFunction& f, Nat n);
GridFunction norlund_log_mean(const GridFunction& f, Nat n);
GridFunction norlund_mean(const GridFunction& f, Nat n, const WeightSequence& q);
GridFunction t_mean(const GridFunction& f, Nat n, const WeightSequence& q);

struct RegularityRow {
    Nat n = 0;
    double ratio = 0.0;        // q_{n-1} / Q_n
    double scaled = 0.0;       // n q_{n-1} / Q_n
    bool envelope = true;      // n q_{n-1} <= Q_n <= n q_0 (nonincreasing) or reversed (nondecreasing)
};

struct RegularityReport {
    std::vector<RegularityRow> rows;
    bool monotone = true;      // declared monotonicity holds on the table range
    bool envelope = true;
};

RegularityReport regularity_report(const WeightSequence& q, Nat n_max);

/// sup_{n in indices} |mean_n f(x)| / w(n), pointwise.
GridFunction weighted_maximal(const GridFunction& f, const MeanSpec& spec, std::span<const Nat> indices,
                              const std::function<double(Nat)>& weight = {});

/// Indices M_0, M_1, ..., M_N for restricted maximal operators.
std::vector<Nat> power_indices(const GroupSpec& g, int N);

} // namespace vilenkin
