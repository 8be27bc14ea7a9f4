#include "vilenkin/kernels.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <numbers>
#include <sstream>

#include "vilenkin/characters.hpp"

namespace vilenkin {

std::string_view to_string(KernelKind kind) noexcept {
    switch (kind) {
    case KernelKind::dirichlet: return "dirichlet";
    case KernelKind::fejer: return "fejer";
    case KernelKind::norlund: return "norlund";
    case KernelKind::tmean: return "tmean";
    case KernelKind::riesz_log: return "riesz_log";
    case KernelKind::norlund_log: return "norlund_log";
    }
    return "dirichlet";
}

KernelKind kernel_kind_from_string(std::string_view name) {
    for (auto k : {KernelKind::dirichlet, KernelKind::fejer, KernelKind::norlund, KernelKind::tmean,
                   KernelKind::riesz_log, KernelKind::norlund_log})
        if (to_string(k) == name) return k;
    fail(ErrorKind::invalid_params, "unknown kernel kind '" + std::string(name) + "'");
}

namespace {

int digit_at(std::span<const int> x, int j) {
    return j >= 0 && j < static_cast<int>(x.size()) ? x[static_cast<std::size_t>(j)] : 0;
}

// First nonzero digit; INT_MAX when every stored digit is zero.
int lead(std::span<const int> x) {
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] != 0) return static_cast<int>(j);
    return INT_MAX;
}

Complex r_at(const GroupSpec& g, int k, std::span<const int> x) {
    return g.root(k, static_cast<Nat>(digit_at(x, k)));
}

double dirichlet_power_at(const GroupSpec& g, int j, std::span<const int> x) {
    return lead(x) >= j ? static_cast<double>(g.block(j)) : 0.0;
}

// sum_{k=a}^{b-1} r^k for r = exp(2 pi i e / m), via the phase table.
Complex root_sum(const GroupSpec& g, int level, Nat e, Nat a, Nat b) {
    Complex s{};
    for (Nat k = a; k < b; ++k) s += g.root(level, e * k);
    return s;
}

void check_rank(const GroupSpec& g, Nat n, int N) {
    require(N >= 0 && N <= g.levels(), ErrorKind::shape, "resolution outside the group");
    if (n > g.block(N))
        fail(ErrorKind::shape,
             "kernel index " + std::to_string(n) + " is not constant on rank-" + std::to_string(N) + " cosets");
}

Complex dirichlet_digits_at(const GroupSpec& g, const NatDigits& nd, std::span<const int> x) {
    if (nd.value == 0) return {};
    Nat phase = 0;
    for (int k = 0; k <= nd.hi; ++k) {
        const Nat m = static_cast<Nat>(g.radix(k));
        phase += (static_cast<Nat>(nd.digit(k)) * static_cast<Nat>(digit_at(x, k)) % m) * g.phase_step(k);
    }
    const int t = lead(x);
    Complex s{};
    for (int j = 0; j <= std::min(nd.hi, t); ++j) {
        const int nj = nd.digit(j);
        if (nj == 0) continue;
        const Nat m = static_cast<Nat>(g.radix(j));
        s += static_cast<double>(g.block(j)) *
             root_sum(g, j, static_cast<Nat>(digit_at(x, j)), m - static_cast<Nat>(nj), m);
    }
    return g.phase(phase) * s;
}

bool is_top(const GroupSpec& g, Nat n) { return n == g.block(g.levels()); }

GridFunction tabulate(const GroupSpec& g, int N, const std::function<Complex(std::span<const int>)>& fn) {
    std::vector<Complex> v(g.block(N));
    std::vector<int> digits(static_cast<std::size_t>(N), 0);
    for (Nat i = 0; i < v.size(); ++i) {
        v[i] = fn(digits);
        // Odometer increment keeps the digit vector in step with i.
        for (int j = 0; j < N; ++j) {
            auto& d = digits[static_cast<std::size_t>(j)];
            if (++d < g.radix(j)) break;
            d = 0;
        }
    }
    return GridFunction(g, N, std::move(v));
}

} // namespace

GridFunction dirichlet_combination(const GroupSpec& g, Nat n, int N, const std::function<double(Nat)>& c) {
    check_rank(g, n, N);
    const Nat size = g.block(N);
    std::vector<Complex> d(size);
    std::vector<Complex> acc(size);
    for (Nat k = 1; k <= n; ++k) {
        for (Nat x = 0; x < size; ++x) d[x] += character_at(g, N, k - 1, x);
        const double w = c(k);
        if (w == 0.0) continue;
        for (Nat x = 0; x < size; ++x) acc[x] += w * d[x];
    }
    return GridFunction(g, N, std::move(acc));
}

Complex dirichlet_at(const GroupSpec& g, Nat n, std::span<const int> x) {
    if (is_top(g, n)) return dirichlet_power_at(g, g.levels(), x);
    return dirichlet_digits_at(g, digits_of(n, g), x);
}

Complex fejer_power_at(const GroupSpec& g, int n, std::span<const int> x) {
    require(n >= 0 && n <= g.levels(), ErrorKind::range, "K_{M_n} needs 0 <= n <= levels");
    const int t = lead(x);
    if (t >= n) return (static_cast<double>(g.block(n)) + 1.0) / 2.0;
    for (int j = t + 1; j < n; ++j)
        if (digit_at(x, j) != 0) return {};
    return static_cast<double>(g.block(t)) / (1.0 - r_at(g, t, x));
}

Complex fejer_block_at(const GroupSpec& g, int n, int s, std::span<const int> x) {
    require(n >= 0 && n < g.levels(), ErrorKind::range, "K_{s M_n} needs n < levels");
    require(s >= 1 && s < g.radix(n), ErrorKind::range, "K_{s M_n} needs 1 <= s < m_n");
    const double M = static_cast<double>(g.block(n));
    const Complex r = r_at(g, n, x);
    const double dM = dirichlet_power_at(g, n, x);
    const Complex kM = fejer_power_at(g, n, x);
    Complex head{};
    Complex powers{};
    Complex rl{1.0, 0.0};
    for (int l = 0; l < s; ++l) {
        head += powers;
        powers += rl;
        rl *= r;
    }
    return (head * M * dM + powers * M * kM) / (static_cast<double>(s) * M);
}

namespace {

Complex dirichlet_block_at(const GroupSpec& g, int n, int s, std::span<const int> x) {
    const double dM = dirichlet_power_at(g, n, x);
    if (dM == 0.0) return {};
    return dM * root_sum(g, n, static_cast<Nat>(digit_at(x, n)), 0, static_cast<Nat>(s));
}

Complex fejer_digits_at(const GroupSpec& g, const NatDigits& nd, std::span<const int> x) {
    Complex acc{};
    Complex prod{1.0, 0.0};
    Nat rest = nd.value;
    for (int j = nd.hi; j >= 0; --j) {
        const int s = nd.digit(j);
        if (s == 0) continue;
        const Nat block = static_cast<Nat>(s) * g.block(j);
        rest -= block;
        Complex term = static_cast<double>(block) * fejer_block_at(g, j, s, x);
        if (rest != 0) term += static_cast<double>(rest) * dirichlet_block_at(g, j, s, x);
        acc += prod * term;
        prod *= g.root(j, static_cast<Nat>(s) * static_cast<Nat>(digit_at(x, j)));
    }
    return acc / static_cast<double>(nd.value);
}

} // namespace

Complex fejer_at(const GroupSpec& g, Nat n, std::span<const int> x) {
    require(n >= 1, ErrorKind::range, "K_n needs n >= 1");
    if (is_top(g, n)) return fejer_power_at(g, g.levels(), x);
    return fejer_digits_at(g, digits_of(n, g), x);
}

GridFunction dirichlet(const GroupSpec& g, Nat n, int N) {
    check_rank(g, n, N);
    if (n == 0) return GridFunction::zeros(g, N);
    if (is_top(g, n)) return tabulate(g, N, [&](std::span<const int> x) { return Complex(dirichlet_power_at(g, N, x)); });
    const auto nd = digits_of(n, g);
    return tabulate(g, N, [&](std::span<const int> x) { return dirichlet_digits_at(g, nd, x); });
}

GridFunction dirichlet_direct(const GroupSpec& g, Nat n, int N) {
    check_rank(g, n, N);
    return GridFunction::from_index(g, N, [&](Nat x) {
        Complex s{};
        for (Nat k = 0; k < n; ++k) s += character_at(g, N, k, x);
        return s;
    });
}

GridFunction fejer(const GroupSpec& g, Nat n, int N) {
    require(n >= 1, ErrorKind::range, "K_n needs n >= 1");
    check_rank(g, n, N);
    if (is_top(g, n)) return fejer_power(g, g.levels(), N);
    const auto nd = digits_of(n, g);
    return tabulate(g, N, [&](std::span<const int> x) { return fejer_digits_at(g, nd, x); });
}

GridFunction fejer_direct(const GroupSpec& g, Nat n, int N) {
    require(n >= 1, ErrorKind::range, "K_n needs n >= 1");
    const double inv = 1.0 / static_cast<double>(n);
    return dirichlet_combination(g, n, N, [inv](Nat) { return inv; });
}

GridFunction fejer_power(const GroupSpec& g, int n, int N) {
    require(n >= 0 && n <= N, ErrorKind::shape, "K_{M_n} is tabulated at resolution N >= n");
    check_rank(g, g.block(n), N);
    return tabulate(g, N, [&](std::span<const int> x) { return fejer_power_at(g, n, x); });
}

GridFunction fejer_block(const GroupSpec& g, int n, int s, int N) {
    require(n >= 0 && n < g.levels(), ErrorKind::range, "K_{s M_n} needs n < levels");
    check_rank(g, static_cast<Nat>(s) * g.block(n), N);
    return tabulate(g, N, [&](std::span<const int> x) { return fejer_block_at(g, n, s, x); });
}

GridFunction norlund_kernel(const WeightSequence& q, const GroupSpec& g, Nat n, int N) {
    require(n >= 1, ErrorKind::range, "A_n needs n >= 1");
    require(q.q(0) > 0.0, ErrorKind::degenerate_weights, "Norlund weights need q_0 > 0");
    const double Q = q.Q(n);
    require(Q > 0.0, ErrorKind::degenerate_weights, "Q_n = 0");
    return dirichlet_combination(g, n, N, [&](Nat k) { return q.q(n - k) / Q; });
}

GridFunction tmean_kernel(const WeightSequence& q, const GroupSpec& g, Nat n, int N) {
    require(n >= 1, ErrorKind::range, "F_n needs n >= 1");
    const double Q = q.Q(n);
    require(Q > 0.0, ErrorKind::degenerate_weights, "Q_n = 0");
    check_rank(g, n, N);
    if (n == 1) return GridFunction::zeros(g, N);
    return dirichlet_combination(g, n - 1, N, [&](Nat k) { return q.q(k) / Q; });
}

GridFunction riesz_log_kernel(const GroupSpec& g, Nat n, int N) {
    require(n >= 2, ErrorKind::range, "Y_n needs n >= 2 (l_n > 0)");
    check_rank(g, n, N);
    const double l = log_normalizer(n);
    return dirichlet_combination(g, n - 1, N, [l](Nat k) { return 1.0 / (static_cast<double>(k) * l); });
}

GridFunction norlund_log_kernel(const GroupSpec& g, Nat n, int N) {
    require(n >= 2, ErrorKind::range, "P_n needs n >= 2 (l_n > 0)");
    check_rank(g, n, N);
    const double l = log_normalizer(n);
    return dirichlet_combination(g, n - 1, N, [l, n](Nat k) { return 1.0 / (static_cast<double>(n - k) * l); });
}

GridFunction make_kernel(KernelKind kind, const GroupSpec& g, Nat n, int N, const WeightSequence* q) {
    switch (kind) {
    case KernelKind::dirichlet: return dirichlet_direct(g, n, N);
    case KernelKind::fejer: return fejer_direct(g, n, N);
    case KernelKind::norlund:
        require(q != nullptr, ErrorKind::invalid_params, "norlund kernel needs weights");
        return norlund_kernel(*q, g, n, N);
    case KernelKind::tmean:
        require(q != nullptr, ErrorKind::invalid_params, "T kernel needs weights");
        return tmean_kernel(*q, g, n, N);
    case KernelKind::riesz_log: return riesz_log_kernel(g, n, N);
    case KernelKind::norlund_log: return norlund_log_kernel(g, n, N);
    }
    fail(ErrorKind::invalid_params, "unknown kernel kind");
}

double lebesgue_constant(const GroupSpec& g, Nat n) {
    require(n >= 1, ErrorKind::range, "L_n needs n >= 1");
    const auto nd = digits_of(n, g);
    const int N = nd.hi + 1;
    // Exact for integer-valued kernels: summed in the order of the grid.
    double s = 0.0;
    const auto d = tabulate(g, N, [&](std::span<const int> x) { return dirichlet_digits_at(g, nd, x); });
    for (const auto& v : d.values()) s += std::abs(v);
    return s / static_cast<double>(d.size());
}

LebesgueBounds lebesgue_bounds(const GroupSpec& g, Nat n, VariationConvention convention) {
    require(n >= 1, ErrorKind::range, "Lebesgue bounds need n >= 1");
    const auto nd = digits_of(n, g);
    LebesgueBounds b;
    b.v = variation_v(nd, convention);
    b.vstar = variation_vstar(nd, g);
    const double lam = g.lambda();
    b.lower = b.v / (4.0 * lam) + b.vstar / (lam * lam);
    b.upper = static_cast<double>(b.v + b.vstar);
    return b;
}

Nat alternating_block_sum(const GroupSpec& g, int k) {
    require(k >= 0 && 2 * k < g.levels(), ErrorKind::overflow, "M_{2k} outside the group");
    Nat s = 0;
    for (int j = 0; j <= k; ++j) s += g.block(2 * j);
    return s;
}

namespace {

std::string str(long long v) { return std::to_string(v); }

std::string radices_key(const GroupSpec& g) {
    std::ostringstream os;
    for (int k = 0; k < g.levels(); ++k) os << (k ? "," : "") << g.radix(k);
    return os.str();
}

// integral over t in I_N of |K(x - t)|, K tabulated at resolution R >= N.
double coset_integral(const GridFunction& K, int N, Nat x) {
    const auto& g = K.group();
    const Nat step = g.block(N);
    double s = 0.0;
    for (Nat t = 0; t < K.size(); t += step) s += std::abs(K[index_sub(g, K.resolution(), x, t)]);
    return s / static_cast<double>(K.size());
}

// Indices at resolution R whose digits 0..fixed.size()-1 equal `fixed`.
std::vector<Nat> coset_points(const GroupSpec& g, int R, const std::vector<int>& fixed) {
    Point p;
    p.digits = fixed;
    p.digits.resize(static_cast<std::size_t>(R), 0);
    return coset_indices(g, R, static_cast<int>(fixed.size()), p);
}

} // namespace

std::vector<VerificationRecord> kernel_lemma_bounds(const GroupSpec& g, Nat n_max, int N, double tol) {
    require(N >= 1 && N <= g.levels(), ErrorKind::range, "resolution outside the group");
    const std::string suite = "lemmas";
    const std::string G = radices_key(g);
    std::vector<VerificationRecord> out;
    const auto shells = coset_partition(g, N);
    std::vector<std::pair<ShellDescriptor, std::vector<Nat>>> shell_sets;
    for (const auto& sh : shells) shell_sets.emplace_back(sh, shell_indices(g, N, sh));

    // K_{M_n} on the sets I_N^{k,l}.
    {
        double star1 = 0.0;
        double star2 = 0.0;
        double star3 = 0.0;
        for (int n = 0; n <= N; ++n) {
            const auto K = fejer_power(g, n, N);
            star3 = std::max(star3, lp_norm(K, 1.0));
            for (const auto& [sh, idx] : shell_sets)
                for (Nat i : idx) {
                    const double a = std::abs(K[i]);
                    if (n > sh.l) star1 = std::max(star1, a);
                    star2 = std::max(star2, a / static_cast<double>(g.block(sh.k)));
                }
        }
        out.push_back(residual_check(suite, "lemma222.star1", {{"m", G}, {"N", str(N)}}, star1, 1e-12));
        out.push_back(report(suite, "lemma222.star2", {{"m", G}, {"N", str(N)}}, star2,
                             "sup |K_{M_n}(x)| / M_k over x in I_N^{k,l}"));
        out.push_back(report(suite, "lemma222.star3", {{"m", G}, {"N", str(N)}}, star3, "sup_n ||K_{M_n}||_1"));
    }

    // n |K_n| against sum_{l=<n>}^{|n|} M_l |K_{M_l}|, and the coset integrals of D_n and K_n.
    {
        double fn5 = 0.0;
        double dn26 = 0.0;
        double l5_inner = 0.0;
        double l5_edge = 0.0;
        double l5aa = 0.0;
        const Nat MN = g.block(N);
        for (Nat n = 1; n <= n_max; ++n) {
            const auto nd = digits_of(n, g);
            const int R = std::max(N, nd.hi + 1);
            const auto K = fejer(g, n, R);
            std::vector<GridFunction> KM;
            for (int l = nd.lo; l <= nd.hi; ++l) KM.push_back(fejer_power(g, l, R));
            for (Nat x = 0; x < K.size(); ++x) {
                double denom = 0.0;
                for (int l = nd.lo; l <= nd.hi; ++l)
                    denom += static_cast<double>(g.block(l)) * std::abs(KM[static_cast<std::size_t>(l - nd.lo)][x]);
                const double num = static_cast<double>(n) * std::abs(K[x]);
                if (denom > 0.0) fn5 = std::max(fn5, num / denom);
                else if (num > 1e-9) fn5 = std::numeric_limits<double>::infinity();
            }
            const auto D = dirichlet(g, n, R);
            for (int s = 0; s < N; ++s)
                for (Nat x : annulus_indices(g, N, s)) {
                    const double v = coset_integral(D, N, x);
                    dn26 = std::max(dn26, v / (static_cast<double>(g.block(s)) / static_cast<double>(MN)));
                }
            for (const auto& [sh, idx] : shell_sets)
                for (Nat x : idx) {
                    const double v = coset_integral(K, N, x);
                    const double Mk = static_cast<double>(g.block(sh.k));
                    const double Ml = static_cast<double>(g.block(sh.l));
                    if (sh.l <= N - 1) l5_inner = std::max(l5_inner, v / (Mk * Ml / (static_cast<double>(n) * MN)));
                    else l5_edge = std::max(l5_edge, v / (Mk / static_cast<double>(MN)));
                    if (n >= MN) l5aa = std::max(l5aa, v / (Mk * Ml / (static_cast<double>(MN) * MN)));
                }
        }
        const Params p{{"m", G}, {"N", str(N)}, {"n_max", str(static_cast<long long>(n_max))}};
        out.push_back(report(suite, "lemma7kn.ratio", p, fn5, "sup n|K_n| / sum M_l |K_{M_l}|"));
        out.push_back(report(suite, "dn2.6", p, dn26, "sup M_N/M_s * int_{I_N} |D_n(x-t)| dt"));
        out.push_back(report(suite, "lemma5.inner", p, l5_inner, "sup n M_N/(M_k M_l) * int_{I_N} |K_n(x-t)| dt"));
        out.push_back(report(suite, "lemma5.edge", p, l5_edge, "sup M_N/M_k * int_{I_N} |K_n(x-t)| dt"));
        out.push_back(report(suite, "lemma5aa", p, l5aa, "sup over n >= M_N of M_N^2/(M_k M_l) * int |K_n(x-t)| dt"));
    }

    // Lower bounds for K_{s M_n} and vanishing off the relevant cosets.
    {
        VerificationRecord low = lower_check(suite, "lemma6kn.lower", {{"m", G}}, 1.0, 0.0, tol);
        double kn1 = 0.0;
        for (int n = 1; n < g.levels(); ++n) {
            const int R = n + 1;
            std::vector<int> x(static_cast<std::size_t>(R), 0);
            x[static_cast<std::size_t>(n - 1)] = 1;
            x[static_cast<std::size_t>(n)] = 1;
            for (int s = 1; s < g.radix(n); ++s) {
                const double v = std::abs(fejer_block_at(g, n, s, x));
                const double b = static_cast<double>(g.block(n)) / (2.0 * std::numbers::pi * s);
                merge_worst(low, lower_check(suite, "lemma6kn.lower",
                                             {{"m", G}, {"n", str(n)}, {"s", str(s)}}, v, b, tol));
                if (g.block(R) > 4096) continue;
                const auto K = fejer_block(g, n, s, R);
                for (Nat i = 1; i < K.size(); ++i) {
                    const auto p = point_at(g, R, i);
                    const int t = first_nonzero(p);
                    if (t >= n) continue;
                    bool in_In = true;
                    for (int j = t + 1; j < n; ++j) in_In = in_In && p.digits[static_cast<std::size_t>(j)] == 0;
                    if (!in_In) kn1 = std::max(kn1, std::abs(K[i]));
                }
            }
        }
        out.push_back(low);
        out.push_back(residual_check(suite, "lemma6kn.vanishing", {{"m", G}}, kn1, 1e-12));
    }

    // |n K_n| from below on I_{<n>+1}(e_{<n>-1} + e_{<n>}).
    {
        VerificationRecord low = lower_check(suite, "lemma8ccc", {{"m", G}}, 1.0, 0.0, tol);
        double eq = 0.0;
        const double lam = g.lambda();
        for (Nat n = 1; n <= n_max && n < g.block(g.levels()); ++n) {
            const auto nd = digits_of(n, g);
            if (nd.lo == nd.hi || nd.lo < 1) continue;
            const int R = nd.hi + 1;
            if (g.block(R) / g.block(nd.lo + 1) > 4096) continue;
            std::vector<int> fixed(static_cast<std::size_t>(nd.lo + 1), 0);
            fixed[static_cast<std::size_t>(nd.lo - 1)] = 1;
            fixed[static_cast<std::size_t>(nd.lo)] = 1;
            const Nat rest = n - g.block(nd.hi);
            const auto rd = digits_of(rest, g);
            double worst = std::numeric_limits<double>::infinity();
            for (Nat i : coset_points(g, R, fixed)) {
                const auto p = point_at(g, R, i);
                const double a = static_cast<double>(n) * std::abs(fejer_digits_at(g, nd, p.digits));
                const double b = static_cast<double>(rest) * std::abs(fejer_digits_at(g, rd, p.digits));
                eq = std::max(eq, std::abs(a - b));
                worst = std::min(worst, a);
            }
            const double M = static_cast<double>(g.block(nd.lo));
            merge_worst(low, lower_check(suite, "lemma8ccc", {{"m", G}, {"n", str(static_cast<long long>(n))}}, worst,
                                         M * M / (2.0 * std::numbers::pi * lam), tol));
        }
        out.push_back(low);
        out.push_back(residual_check(suite, "lemma8ccc.equality", {{"m", G}, {"n_max", str(static_cast<long long>(n_max))}},
                                     eq, 1e-9));
    }

    // q_{n-1}|K_{q_{n-1}}| >= M_{2k}^2 / 144 for q_n = M_{2n} + ... + M_0.
    {
        VerificationRecord low = lower_check(suite, "cor3a", {{"m", G}}, 1.0, 0.0, tol);
        double lemma3 = std::numeric_limits<double>::infinity();
        for (int j = 1; 2 * j < g.levels(); ++j) {
            const Nat q = alternating_block_sum(g, j);
            const auto nd = digits_of(q, g);
            const int R = nd.hi + 1;
            for (int k = 1; k <= j; ++k) {
                const int lo = 2 * k;
                if (lo + 1 > R) continue;
                if (g.block(R) / g.block(lo + 1) > 4096) continue;
                std::vector<int> fixed(static_cast<std::size_t>(lo + 1), 0);
                fixed[static_cast<std::size_t>(lo - 1)] = 1;
                fixed[static_cast<std::size_t>(lo)] = 1;
                double worst = std::numeric_limits<double>::infinity();
                for (Nat i : coset_points(g, R, fixed)) {
                    const auto p = point_at(g, R, i);
                    worst = std::min(worst, static_cast<double>(q) * std::abs(fejer_digits_at(g, nd, p.digits)));
                }
                const double M = static_cast<double>(g.block(lo));
                lemma3 = std::min(lemma3, worst / (M * M));
                merge_worst(low, lower_check(suite, "cor3a", {{"m", G}, {"q_index", str(j)}, {"k", str(k)}}, worst,
                                             M * M / 144.0, tol));
            }
        }
        out.push_back(low);
        out.push_back(report(suite, "lemma3", {{"m", G}}, lemma3, "inf n|K_n(x)| / M_{l_i}^2 on alternating-block n"));
    }
    return out;
}

std::shared_ptr<const GridFunction> KernelMemo::get(KernelKind kind, const GroupSpec& g, Nat n, int N,
                                                    const WeightSequence* q) {
    Key key{kind, n, N, radices_key(g) + "|" + (q ? q->key() : std::string())};
    {
        std::shared_lock lock(mu_);
        auto it = entries_.find(key);
        if (it != entries_.end()) return it->second;
    }
    auto value = std::make_shared<const GridFunction>(make_kernel(kind, g, n, N, q));
    std::unique_lock lock(mu_);
    auto [it, inserted] = entries_.emplace(std::move(key), std::move(value));
    return it->second;
}

std::size_t KernelMemo::size() const {
    std::shared_lock lock(mu_);
    return entries_.size();
}

void KernelMemo::clear() {
    std::unique_lock lock(mu_);
    entries_.clear();
}

} // namespace vilenkin
