#include "vilenkin/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "vilenkin/kernels.hpp"

namespace vilenkin {

StepMartingale::StepMartingale(GroupSpec group, std::vector<int> levels, std::vector<GridFunction> entries, double tol)
    : group_(std::move(group)), levels_(std::move(levels)), entries_(std::move(entries)) {
    require(!levels_.empty(), ErrorKind::invalid_params, "a martingale needs at least one entry");
    require(levels_.size() == entries_.size(), ErrorKind::shape, "one entry per level is required");
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        require(levels_[i] >= 0 && levels_[i] <= group_.levels(), ErrorKind::range, "martingale level outside the group");
        require(i == 0 || levels_[i] > levels_[i - 1], ErrorKind::invalid_params, "martingale levels must increase");
        require(entries_[i].resolution() == levels_[i], ErrorKind::shape, "entry resolution differs from its level");
        require(entries_[i].group().compatible(group_, levels_[i]), ErrorKind::shape, "entry from a different group");
    }
    for (std::size_t i = 0; i + 1 < levels_.size(); ++i) {
        const auto avg = coarsen(entries_[i + 1], levels_[i]);
        const double d = max_abs_diff(avg, entries_[i]);
        if (!(d <= tol * std::max(1.0, lp_norm(entries_[i + 1], kInfinity))))
            fail(ErrorKind::invalid_params, "martingale law fails between levels " + std::to_string(levels_[i]) + " and " +
                                                std::to_string(levels_[i + 1]));
    }
}

StepMartingale regular_martingale(const GridFunction& f, std::vector<int> levels) {
    if (levels.empty())
        for (int n = 0; n <= f.resolution(); ++n) levels.push_back(n);
    require(levels.back() <= f.resolution(), ErrorKind::range, "level above the resolution of f");
    std::vector<GridFunction> entries;
    entries.reserve(levels.size());
    for (int n : levels) entries.push_back(coarsen(f, n));
    return StepMartingale(f.group(), std::move(levels), std::move(entries));
}

StepMartingale tail_martingale(const GridFunction& f, int n) {
    const int N = f.resolution();
    require(n >= 0 && n <= N, ErrorKind::range, "tail level outside 0..resolution");
    std::vector<int> levels;
    std::vector<GridFunction> entries;
    for (int k = 0; k <= N; ++k) {
        levels.push_back(k);
        if (k <= n) {
            entries.push_back(GridFunction::zeros(f.group(), k));
        } else {
            entries.push_back(coarsen(f, k) - coarsen(f, n).refine(k));
        }
    }
    return StepMartingale(f.group(), std::move(levels), std::move(entries));
}

GridFunction maximal_function(const StepMartingale& mart) {
    const int R = mart.levels().back();
    std::vector<double> sup(mart.finest().size(), 0.0);
    for (const auto& e : mart.entries()) {
        const auto fine = e.refine(R);
        for (Nat x = 0; x < fine.size(); ++x) sup[x] = std::max(sup[x], std::abs(fine[x]));
    }
    // Cancellation residue (E_n of a mean-zero block) would dominate ||f*||_p for p < 1.
    const double top = sup.empty() ? 0.0 : *std::max_element(sup.begin(), sup.end());
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * top;
    for (auto& v : sup)
        if (v <= floor) v = 0.0;
    return GridFunction(mart.group(), R, std::vector<Complex>(sup.begin(), sup.end()));
}

double hardy_quasinorm(const StepMartingale& mart, double p) { return lp_norm(maximal_function(mart), p); }

double modulus(const GridFunction& f, double p, int n) {
    require(n >= 0 && n <= f.resolution(), ErrorKind::range, "modulus level outside 0..resolution");
    const auto& g = f.group();
    double best = 0.0;
    for (Nat h = 0; h < f.size(); h += g.block(n)) best = std::max(best, lp_norm(f.shifted(h) - f, p));
    return best;
}

double modulus_hp(const StepMartingale& mart, double p, int n) {
    return hardy_quasinorm(tail_martingale(mart.finest(), n), p);
}

double best_approx_l2(const GridFunction& f, Nat n) {
    require(n <= f.size(), ErrorKind::range, "approximation order beyond the grid rank");
    const auto s = transform_forward(f);
    double e = 0.0;
    for (Nat k = n; k < f.size(); ++k) e += std::norm(s.coeffs[k]);
    return std::sqrt(e);
}

Bracket best_approx_bounds(const GridFunction& f, double p, Nat n) {
    if (p == 2.0) {
        const double e = best_approx_l2(f, n);
        return {e, e};
    }
    const auto& g = f.group();
    int j = -1;
    for (int k = 0; k <= f.resolution(); ++k)
        if (g.block(k) == n) j = k;
    require(j >= 0, ErrorKind::unsupported, "the L_p bracket is available only for n = M_j");
    const double tail = lp_norm(f - conditional_expectation(f, j), p);
    return {0.5 * tail, tail};
}

bool coset_contains(const Coset& c, const Point& x) {
    for (int j = 0; j < c.rank; ++j) {
        const int a = j < c.anchor.resolution() ? c.anchor.digits[static_cast<std::size_t>(j)] : 0;
        const int b = j < x.resolution() ? x.digits[static_cast<std::size_t>(j)] : 0;
        if (a != b) return false;
    }
    return true;
}

Atom make_atom(double p, Coset support, GridFunction values, double tol) {
    require(p > 0.0 && p <= 1.0, ErrorKind::domain, "atoms need 0 < p <= 1");
    const auto& g = values.group();
    const int N = values.resolution();
    require(support.rank >= 0 && support.rank <= N, ErrorKind::shape, "support coset finer than the atom's grid");
    const double mu = 1.0 / static_cast<double>(g.block(support.rank));
    Complex integral{};
    double sup = 0.0;
    for (Nat x = 0; x < values.size(); ++x) {
        const auto v = values[x];
        if (coset_contains(support, point_at(g, N, x))) {
            integral += v;
            sup = std::max(sup, std::abs(v));
        } else if (v != Complex{}) {
            fail(ErrorKind::atom_support, "atom is nonzero outside its coset");
        }
    }
    integral /= static_cast<double>(values.size());
    const double bound = std::pow(mu, -1.0 / p);
    require(std::abs(integral) <= tol * std::max(1.0, bound), ErrorKind::atom_mean, "atom has nonzero mean");
    require(sup <= bound * (1.0 + tol), ErrorKind::atom_bound, "atom exceeds mu(I)^{-1/p}");
    return Atom{p, std::move(support), std::move(values)};
}

AtomicMartingale atom_martingale(const std::vector<std::pair<double, Atom>>& coeffs) {
    require(!coeffs.empty(), ErrorKind::invalid_params, "no atoms supplied");
    const auto& g = coeffs.front().second.values.group();
    int R = 0;
    for (const auto& [lam, a] : coeffs) R = std::max(R, a.values.resolution());
    auto f = GridFunction::zeros(g, R);
    double sum = 0.0;
    for (const auto& [lam, a] : coeffs) {
        f += a.values.refine(R) * Complex(lam);
        sum += std::pow(std::abs(lam), a.p);
    }
    return {regular_martingale(f), sum};
}

std::string_view to_string(CounterexampleKind kind) noexcept {
    switch (kind) {
    case CounterexampleKind::strong_partial_sums: return "strong-partial-sums";
    case CounterexampleKind::strong_fejer: return "strong-fejer";
    case CounterexampleKind::hp_blocks: return "hp-blocks";
    }
    return "hp-blocks";
}

CounterexampleKind counterexample_kind_from_string(std::string_view name) {
    for (auto k : {CounterexampleKind::strong_partial_sums, CounterexampleKind::strong_fejer, CounterexampleKind::hp_blocks})
        if (to_string(k) == name) return k;
    fail(ErrorKind::invalid_params, "unknown counterexample kind '" + std::string(name) + "'");
}

double default_phi(double n) { return std::max(1.0, std::log(std::log(n))); }

std::pair<Nat, Nat> counterexample_block(const GroupSpec& g, CounterexampleKind kind, int alpha) {
    const Nat M = g.block(alpha);
    if (kind == CounterexampleKind::hp_blocks) return {M, g.block(alpha + 1)};
    return {M, 2 * M};
}

namespace {

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

VerificationRecord gap_report(const std::string& claim, Params params, double lhs, double rhs) {
    auto r = report("counterexample", claim, std::move(params), lhs, lhs < rhs ? "holds" : "fails");
    r.bound = rhs;
    r.margin = rhs - lhs;
    return r;
}

} // namespace

Counterexample counterexample(const GroupSpec& g, CounterexampleKind kind, const CounterexampleParams& params) {
    const auto& alpha = params.alpha;
    require(!alpha.empty(), ErrorKind::invalid_params, "alpha list is empty");
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        require(alpha[k] >= 1, ErrorKind::invalid_params, "alpha_k must be >= 1");
        require(k == 0 || alpha[k] > alpha[k - 1], ErrorKind::invalid_params, "alpha must be strictly increasing");
    }
    const int rank = params.rank > 0 ? params.rank : alpha.back() + 1;
    require(rank >= alpha.back() + 1 && rank <= g.levels(), ErrorKind::invalid_params,
            "rank must hold the last block and fit in the group");
    double p = 1.0;
    if (kind == CounterexampleKind::strong_fejer) p = 0.5;
    if (kind == CounterexampleKind::hp_blocks) {
        p = params.p;
        require(p > 0.0 && p < 1.0, ErrorKind::invalid_params, "hp-blocks needs 0 < p < 1");
    }
    const double lam = g.lambda();

    std::vector<std::pair<double, Atom>> coeffs;
    std::vector<double> lambdas;
    std::vector<double> block_values;
    for (int a : alpha) {
        const double M = static_cast<double>(g.block(a));
        GridFunction shape = dirichlet(g, 2 * g.block(a), rank) - dirichlet(g, g.block(a), rank);
        double lk = 0.0;
        switch (kind) {
        case CounterexampleKind::strong_partial_sums:
            lk = std::sqrt(default_phi(2.0 * M) / std::log(M));
            block_values.push_back(lk);
            break;
        case CounterexampleKind::strong_fejer:
            shape *= Complex(M);
            lk = default_phi(2.0 * M) / std::log(M);
            block_values.push_back(M * lk);
            break;
        case CounterexampleKind::hp_blocks:
            shape = (dirichlet(g, g.block(a + 1), rank) - dirichlet(g, g.block(a), rank)) *
                    Complex(std::pow(M, 1.0 / p - 1.0) / lam);
            lk = lam / a;
            block_values.push_back(std::pow(M, 1.0 / p - 1.0) / a);
            break;
        }
        Coset support{a, Point{std::vector<int>(static_cast<std::size_t>(a), 0)}};
        coeffs.emplace_back(lk, make_atom(p, std::move(support), std::move(shape), 1e-9));
        lambdas.push_back(lk);
    }
    auto am = atom_martingale(coeffs);
    Counterexample out{kind, params, std::move(am.mart), std::move(lambdas), std::move(block_values), am.lambda_p_sum, {}};
    out.params.rank = rank;

    const Params base{{"kind", std::string(to_string(kind))}, {"alpha", join(alpha)}, {"p", format_number(p)}};
    std::vector<double> expected(g.block(rank), 0.0);
    double scale = 1.0;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        const auto [lo, hi] = counterexample_block(g, kind, alpha[k]);
        for (Nat j = lo; j < hi; ++j) expected[j] = out.block_values[k];
        scale = std::max(scale, out.block_values[k]);
    }
    const auto spec = transform_forward(out.mart.finest());
    double residual = 0.0;
    for (Nat j = 0; j < expected.size(); ++j) residual = std::max(residual, std::abs(spec.coeffs[j] - expected[j]));
    const char* claim = kind == CounterexampleKind::strong_partial_sums ? "theorem1.spectrum"
                        : kind == CounterexampleKind::strong_fejer      ? "theorem1sigma.spectrum"
                                                                        : "theorem1T.spectrum";
    out.records.push_back(residual_check("counterexample", claim, base, residual / scale, 1e-12));

    if (kind == CounterexampleKind::hp_blocks) {
        double s2 = 0.0;
        for (int a : alpha) s2 += std::pow(static_cast<double>(a), -p);
        out.records.push_back(report("counterexample", "theorem1T.gap-sum", base, s2, "partial sum of 1/alpha_k^p"));
        for (std::size_t k = 1; k < alpha.size(); ++k) {
            double lhs = 0.0;
            for (std::size_t e = 0; e < k; ++e)
                lhs += std::pow(static_cast<double>(g.block(alpha[e])), 1.0 / p) / alpha[e];
            lhs *= lam;
            const double Mk = static_cast<double>(g.block(alpha[k]));
            const double Mk1 = static_cast<double>(g.block(alpha[k - 1]));
            auto pk = base;
            pk.emplace_back("k", std::to_string(k));
            out.records.push_back(gap_report("theorem1T.gap-growth", pk, lhs, std::pow(Mk, 1.0 / p) / alpha[k]));
            out.records.push_back(gap_report("theorem1T.gap-separation", pk, 32.0 * lam * std::pow(Mk1, 1.0 / p) / alpha[k - 1],
                                             std::pow(Mk, 1.0 / p - 2.0) / alpha[k]));
        }
    } else {
        double s = 0.0;
        for (int a : alpha) {
            const double M = static_cast<double>(g.block(a));
            s += std::sqrt(default_phi(2.0 * M) / std::log(M));
        }
        out.records.push_back(report("counterexample", kind == CounterexampleKind::strong_partial_sums ? "theorem1.lambda-sum" : "theorem1sigma.lambda-sum",
                                     base, s, "partial sum of phi^{1/2}(2M)/log^{1/2}M"));
    }
    return out;
}

} // namespace vilenkin
