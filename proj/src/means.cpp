#include "vilenkin/means.hpp"

#include <algorithm>
#include <cmath>

#include "vilenkin/kernels.hpp"

namespace vilenkin {

std::string_view to_string(MeanKind kind) noexcept {
    switch (kind) {
    case MeanKind::partial_sum: return "partial_sum";
    case MeanKind::fejer: return "fejer";
    case MeanKind::cesaro: return "cesaro";
    case MeanKind::u: return "u";
    case MeanKind::v: return "v";
    case MeanKind::riesz_log: return "riesz_log";
    case MeanKind::norlund_log: return "norlund_log";
    case MeanKind::norlund: return "norlund";
    case MeanKind::tmean: return "tmean";
    }
    return "fejer";
}

MeanKind mean_kind_from_string(std::string_view name) {
    for (auto k : {MeanKind::partial_sum, MeanKind::fejer, MeanKind::cesaro, MeanKind::u, MeanKind::v,
                   MeanKind::riesz_log, MeanKind::norlund_log, MeanKind::norlund, MeanKind::tmean})
        if (to_string(k) == name) return k;
    fail(ErrorKind::invalid_params, "unknown mean kind '" + std::string(name) + "'");
}

namespace {

const WeightSequence& weights_of(const MeanSpec& spec) {
    require(spec.weights.has_value(), ErrorKind::invalid_params,
            std::string(to_string(spec.kind)) + " mean needs a weight sequence");
    return *spec.weights;
}

double positive_Q(const WeightSequence& q, Nat n) {
    const double Q = q.Q(n);
    require(Q > 0.0, ErrorKind::degenerate_weights, "Q_n = 0 for " + q.name());
    return Q;
}

} // namespace

std::vector<double> partial_sum_weights(const MeanSpec& spec, Nat n) {
    require(n >= 1, ErrorKind::range, "means are defined for n >= 1");
    std::vector<double> w(n + 1, 0.0);
    switch (spec.kind) {
    case MeanKind::partial_sum: w[n] = 1.0; break;
    case MeanKind::fejer:
        for (Nat k = 1; k <= n; ++k) w[k] = 1.0 / static_cast<double>(n);
        break;
    case MeanKind::cesaro: {
        require(spec.alpha > 0.0 && spec.alpha <= 1.0, ErrorKind::domain, "(C, alpha) means need 0 < alpha <= 1");
        CesaroCoeffs A(spec.alpha, n);
        CesaroCoeffs B(spec.alpha - 1.0, n);
        for (Nat k = 1; k <= n; ++k) w[k] = B(n - k) / A(n);
        break;
    }
    case MeanKind::u: {
        require(spec.alpha > 0.0 && spec.alpha < 1.0, ErrorKind::domain, "U means need 0 < alpha < 1");
        CesaroCoeffs A(spec.alpha, n);
        CesaroCoeffs B(spec.alpha - 1.0, n);
        for (Nat k = 1; k < n; ++k) w[k] = B(k) / A(n);
        break;
    }
    case MeanKind::v:
    case MeanKind::tmean: {
        const auto& q = weights_of(spec);
        const double Q = positive_Q(q, n);
        for (Nat k = 1; k < n; ++k) w[k] = q.q(k) / Q;
        break;
    }
    case MeanKind::norlund: {
        const auto& q = weights_of(spec);
        const double Q = positive_Q(q, n);
        for (Nat k = 1; k <= n; ++k) w[k] = q.q(n - k) / Q;
        break;
    }
    case MeanKind::riesz_log:
    case MeanKind::norlund_log: {
        require(n >= 2, ErrorKind::range, "logarithmic means need n >= 2");
        const double l = log_normalizer(n);
        for (Nat k = 1; k < n; ++k)
            w[k] = 1.0 / (static_cast<double>(spec.kind == MeanKind::riesz_log ? k : n - k) * l);
        break;
    }
    }
    return w;
}

std::vector<double> mean_multiplier(const MeanSpec& spec, Nat n, Nat size) {
    require(n <= size, ErrorKind::range, "mean index beyond the grid rank");
    const auto w = partial_sum_weights(spec, n);
    std::vector<double> mult(size, 0.0);
    // f^(j) enters S_k for every k > j.
    double tail = 0.0;
    for (Nat j = n; j-- > 0;) {
        tail += w[j + 1];
        mult[j] = tail;
    }
    return mult;
}

GridFunction apply_mean(const GridFunction& f, const MeanSpec& spec, Nat n) {
    const auto mult = mean_multiplier(spec, n, f.size());
    return apply_multiplier(f, std::span<const double>(mult));
}

GridFunction mean_kernel(const MeanSpec& spec, const GroupSpec& g, Nat n, int N) {
    switch (spec.kind) {
    case MeanKind::partial_sum: return dirichlet_direct(g, n, N);
    case MeanKind::fejer: return fejer_direct(g, n, N);
    case MeanKind::norlund: return norlund_kernel(weights_of(spec), g, n, N);
    case MeanKind::tmean:
    case MeanKind::v: return tmean_kernel(weights_of(spec), g, n, N);
    case MeanKind::riesz_log: return riesz_log_kernel(g, n, N);
    case MeanKind::norlund_log: return norlund_log_kernel(g, n, N);
    case MeanKind::cesaro:
    case MeanKind::u: {
        const auto w = partial_sum_weights(spec, n);
        return dirichlet_combination(g, n, N, [&w](Nat k) { return w[k]; });
    }
    }
    fail(ErrorKind::invalid_params, "unknown mean kind");
}

GridFunction fejer_mean(const GridFunction& f, Nat n) { return apply_mean(f, MeanSpec::fejer(), n); }
GridFunction cesaro_mean(const GridFunction& f, Nat n, double alpha) { return apply_mean(f, MeanSpec::cesaro(alpha), n); }
GridFunction u_mean(const GridFunction& f, Nat n, double alpha) { return apply_mean(f, MeanSpec::u(alpha), n); }
GridFunction v_mean(const GridFunction& f, Nat n, double alpha) { return apply_mean(f, MeanSpec::v(alpha), n); }
GridFunction riesz_log_mean(const GridFunction& f, Nat n) { return apply_mean(f, MeanSpec::riesz_log(), n); }
GridFunction norlund_log_mean(const GridFunction& f, Nat n) { return apply_mean(f, MeanSpec::norlund_log(), n); }
GridFunction norlund_mean(const GridFunction& f, Nat n, const WeightSequence& q) {
    return apply_mean(f, MeanSpec::norlund(q), n);
}
GridFunction t_mean(const GridFunction& f, Nat n, const WeightSequence& q) { return apply_mean(f, MeanSpec::tmean(q), n); }

RegularityReport regularity_report(const WeightSequence& q, Nat n_max) {
    RegularityReport rep;
    rep.monotone = q.verify_monotonicity(n_max);
    const double q0 = q.q(0);
    for (Nat n = 1; n <= n_max; ++n) {
        RegularityRow row;
        row.n = n;
        const double Q = q.Q(n);
        const double last = q.q(n - 1);
        row.ratio = Q > 0.0 ? last / Q : std::numeric_limits<double>::infinity();
        row.scaled = static_cast<double>(n) * row.ratio;
        const double nl = static_cast<double>(n) * last;
        const double n0 = static_cast<double>(n) * q0;
        const double slack = 1e-12 * std::max(1.0, Q);
        switch (q.declared()) {
        case Monotonicity::nonincreasing: row.envelope = nl <= Q + slack && Q <= n0 + slack; break;
        case Monotonicity::nondecreasing: row.envelope = n0 <= Q + slack && Q <= nl + slack; break;
        case Monotonicity::general: row.envelope = true; break;
        }
        rep.envelope = rep.envelope && row.envelope;
        rep.rows.push_back(row);
    }
    return rep;
}

GridFunction weighted_maximal(const GridFunction& f, const MeanSpec& spec, std::span<const Nat> indices,
                              const std::function<double(Nat)>& weight) {
    require(!indices.empty(), ErrorKind::range, "maximal operator over an empty index set");
    std::vector<double> sup(f.size(), 0.0);
    for (Nat n : indices) {
        const auto m = apply_mean(f, spec, n);
        const double w = weight ? weight(n) : 1.0;
        require(w > 0.0, ErrorKind::domain, "maximal weights must be positive");
        for (Nat x = 0; x < f.size(); ++x) sup[x] = std::max(sup[x], std::abs(m[x]) / w);
    }
    std::vector<Complex> out(sup.begin(), sup.end());
    return GridFunction(f.group(), f.resolution(), std::move(out));
}

std::vector<Nat> power_indices(const GroupSpec& g, int N) {
    std::vector<Nat> out;
    for (int k = 0; k <= N; ++k) out.push_back(g.block(k));
    return out;
}

} // namespace vilenkin
