#include "vilenkin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "vilenkin/characters.hpp"
#include "vilenkin/kernels.hpp"

namespace vilenkin {
namespace {

using Pairs = std::initializer_list<std::pair<std::string, std::string>>;

std::string str(Nat v) { return std::to_string(v); }
std::string str(int v) { return std::to_string(v); }

std::string radix_list(const GroupSpec& g) {
    std::ostringstream os;
    for (int k = 0; k < g.levels(); ++k) os << (k ? "," : "") << g.radix(k);
    return os.str();
}

template <class Seq>
std::string join(const Seq& xs) {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : xs) {
        os << (first ? "" : ",") << x;
        first = false;
    }
    return os.str();
}

std::string join_numbers(std::span<const double> xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + format_number(xs[i]);
    return out;
}

class Emitter {
public:
    Emitter(std::string suite, const GroupSpec& g) : suite_(std::move(suite)), m_(radix_list(g)) {}

    Params params(Pairs extra = {}) const {
        Params p{{"m", m_}};
        p.insert(p.end(), extra.begin(), extra.end());
        return p;
    }
    const std::string& suite() const { return suite_; }

    void residual(const std::string& claim, Pairs extra, double r, double tol) {
        out.push_back(residual_check(suite_, claim, params(extra), r, tol));
    }
    void report(const std::string& claim, Pairs extra, double v, std::string note = {}) {
        out.push_back(vilenkin::report(suite_, claim, params(extra), v, std::move(note)));
    }

    std::vector<VerificationRecord> out;

private:
    std::string suite_;
    std::string m_;
};

// Keeps the instance with the worst margin.
struct Worst {
    std::optional<VerificationRecord> rec;
    void add(VerificationRecord r) {
        if (!rec) rec = std::move(r);
        else merge_worst(*rec, r);
    }
    void emit(std::vector<VerificationRecord>& out) {
        if (rec) out.push_back(*rec);
    }
};

// Empirical supremum with the parameters where it was attained.
struct Sup {
    double value = 0.0;
    Params at;
    bool any = false;
    void add(double v, Params p) {
        if (!any || v > value || (std::isnan(v) && !std::isnan(value))) {
            value = v;
            at = std::move(p);
            any = true;
        }
    }
    void emit(std::vector<VerificationRecord>& out, const std::string& suite, const std::string& claim,
              std::string note) {
        if (any) out.push_back(report(suite, claim, at, value, std::move(note)));
    }
};

double ratio_or_inf(double num, double den) {
    if (den > 0.0) return num / den;
    return num > 1e-12 ? std::numeric_limits<double>::infinity() : 0.0;
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t i) {
    // splitmix64 finaliser over (seed, tag, i)
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (tag * 1000003ull + i + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Largest rank N >= 1 with M_N <= cap.
int rank_below(const GroupSpec& g, Nat cap) {
    int N = 1;
    while (N < g.levels() && g.block(N + 1) <= cap) ++N;
    return N;
}

GridFunction rademacher_grid(const GroupSpec& g, int N, int k) {
    const Nat M = g.block(k);
    const Nat m = static_cast<Nat>(g.radix(k));
    return GridFunction::from_index(g, N, [&](Nat x) { return g.root(k, (x / M) % m); });
}

GridFunction character_grid(const GroupSpec& g, int N, Nat n) {
    return GridFunction::from_index(g, N, [&](Nat x) { return character_at(g, N, n, x); });
}

// D_0..D_count at resolution N, adding one character at a time.
std::vector<GridFunction> dirichlet_table(const GroupSpec& g, int N, Nat count) {
    const Nat size = g.block(N);
    std::vector<GridFunction> out;
    out.reserve(count + 1);
    std::vector<Complex> acc(size);
    out.emplace_back(g, N, acc);
    for (Nat k = 0; k < count; ++k) {
        for (Nat x = 0; x < size; ++x) acc[x] += character_at(g, N, k, x);
        out.emplace_back(g, N, acc);
    }
    return out;
}

// K_n = (1/n) sum_{k=1}^n D_k from a Dirichlet table; K_0 = 0.
std::vector<GridFunction> fejer_table(const std::vector<GridFunction>& D) {
    std::vector<GridFunction> out;
    out.reserve(D.size());
    auto acc = D.front();
    out.push_back(acc);
    for (std::size_t n = 1; n < D.size(); ++n) {
        acc += D[n];
        out.push_back(acc * Complex(1.0 / static_cast<double>(n)));
    }
    return out;
}

// Integral over t in I_N of |G(x - t)| for G tabulated at resolution R >= N.
double coset_abs_integral(const GridFunction& G, int N, Nat x) {
    const Nat step = G.group().block(N);
    double s = 0.0;
    for (Nat t = x % step; t < G.size(); t += step) s += std::abs(G[t]);
    return s / static_cast<double>(G.size());
}

std::vector<WeightSequence> nonincreasing_weights() {
    return {WeightSequence::constant(), WeightSequence::harmonic(), WeightSequence::power(0.5)};
}

std::vector<WeightSequence> nondecreasing_weights() {
    return {WeightSequence::iterated_log(1.0, 1), WeightSequence::power(1.5)};
}

std::vector<Nat> range(Nat lo, Nat hi) {
    std::vector<Nat> out;
    for (Nat n = lo; n <= hi; ++n) out.push_back(n);
    return out;
}

bool is_log_mean(MeanKind k) { return k == MeanKind::riesz_log || k == MeanKind::norlund_log; }

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"identities", "inequalities", "lemmas", "structure", "strong", "all"};
    return names;
}

const std::vector<std::string>& anchor_catalogue() {
    static const std::vector<std::string> anchors{
        // groups, characters, kernels
        "group", "metric", "characters", "partial-sums", "fejer-means", "dn21", "dn22", "3aa", "9dn", "2dna", "5aa",
        "kn8", "mag", "kn10", "knbounded",
        // digit functions and Lebesgue constants
        "digit-functions", "hat-arithmetic", "variation", "lebesgue", "var1", "Dn", "Dnqn",
        // summability methods
        "norlund-means", "tmeans", "cesaro", "node0", "node01", "log-means", "112", "weighted-maximal",
        // convolution
        "convolution", "covstrong",
        // martingales and Hardy spaces
        "martingales", "condmart", "maximal-function", "lemma2.3.4", "modulus", "eqvi", "g100",
        // kernel lemmas
        "dn2.6", "lemma222", "lemma7kn", "lemma5", "lemma5aa", "lemma6kn", "lemma8ccc", "lemma3", "cor3a",
        // strong sums and counterexamples
        "theorem1", "theorem1sigma", "theorem1sub",
        // T means
        "T1", "T2", "lemma0nnT0", "lemma5aaTin", "lemma0nnT", "lemma5a", "lemma5bT", "lemma0nnT1", "lemma5aT",
        "lemma5b", "theorem1T",
        // logarithmic means
        "reiszkernel", "l2", "lemma0nnT121", "dn2.7", "threisz_2", "norlund-log-maximal"};
    return anchors;
}

std::string anchor_of(std::string_view claim) {
    std::string best;
    for (const auto& a : anchor_catalogue()) {
        if (claim.size() < a.size() || claim.substr(0, a.size()) != a) continue;
        if (claim.size() != a.size() && claim[a.size()] != '.') continue;
        if (a.size() > best.size()) best = a;
    }
    return best;
}

int working_rank(const GroupSpec& g, Nat n) {
    int N = 0;
    while (N < g.levels() && g.block(N) < n) ++N;
    if (g.block(N) < n) fail(ErrorKind::range, "n exceeds M_levels of the group");
    return N;
}

GridFunction random_function(const GroupSpec& g, int N, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    auto unit = [&] { return 2.0 * static_cast<double>(gen() >> 11) * 0x1.0p-53 - 1.0; };
    std::vector<Complex> v(g.block(N));
    for (auto& z : v) {
        const double re = unit();
        const double im = unit();
        z = {re, im};
    }
    return GridFunction(g, N, std::move(v));
}

VerificationRecord trend_record(std::string suite, std::string claim, Params params, std::span<const double> values,
                                std::string note, bool increasing) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < values.size(); ++i)
        worst = std::min(worst, increasing ? values[i] - values[i - 1] : values[i - 1] - values[i]);
    if (values.size() < 2) worst = 0.0;
    VerificationRecord r;
    r.suite = std::move(suite);
    r.claim = std::move(claim);
    r.params = std::move(params);
    r.params.emplace_back("values", join_numbers(values));
    r.value = worst;
    r.bound = 0.0;
    r.margin = worst;
    r.pass = values.size() >= 2 && worst > 0.0;
    r.kind = RecordKind::trend;
    r.note = std::move(note);
    return r;
}

void sort_records(std::vector<VerificationRecord>& records) {
    std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        if (a.claim != b.claim) return a.claim < b.claim;
        if (a.params != b.params) return a.params < b.params;
        return a.suite < b.suite;
    });
}

bool all_pass(std::span<const VerificationRecord> records) {
    return std::all_of(records.begin(), records.end(),
                       [](const auto& r) { return r.kind == RecordKind::report || r.pass; });
}

// ---------------------------------------------------------------------------
// identities

std::vector<VerificationRecord> run_identity_suite(const GroupSpec& g, const SuiteConfig& cfg) {
    Emitter E("identities", g);
    const double tol = cfg.tol;
    const int N = working_rank(g, std::max<Nat>(cfg.n_max, 2));
    const Nat MN = g.block(N);
    const Nat n_max = std::min(cfg.n_max, MN);
    const auto D = dirichlet_table(g, N, MN);
    const auto K = fejer_table(D);

    for (int k = 0; k <= N; ++k) {
        const Nat M = g.block(k);
        const auto ind =
            GridFunction::from_index(g, N, [&](Nat x) { return Complex(x % M == 0 ? static_cast<double>(M) : 0.0); });
        E.residual("3aa", {{"n", str(k)}}, max_abs_diff(D[M], ind), tol);
    }

    for (int k = 0; k < N; ++k) {
        const Nat M = g.block(k);
        const int m = g.radix(k);
        const auto r = rademacher_grid(g, N, k);
        double res = 0.0;
        for (Nat j = 0; j <= static_cast<Nat>(m - 1) * M; ++j)
            res = std::max(res, max_abs_diff(D[j + M], D[M] + r * D[j]));
        E.residual("dn21", {{"n", str(k)}}, res, tol);

        double geo_res = 0.0;
        auto geo = GridFunction::zeros(g, N);
        auto pw = GridFunction::constant(g, N, 1.0);
        for (int s = 1; s < m; ++s) {
            geo += pw;
            pw *= r;
            geo_res = std::max(geo_res, max_abs_diff(D[static_cast<Nat>(s) * M], D[M] * geo));
        }
        E.residual("9dn", {{"n", str(k)}}, geo_res, tol);

        double mag_res = 0.0;
        for (int s = 1; s < m; ++s)
            mag_res = std::max(mag_res, max_abs_diff(fejer_block(g, k, s, N), K[static_cast<Nat>(s) * M]));
        E.residual("mag", {{"n", str(k)}}, mag_res, tol);
    }

    for (int k = 0; k <= N; ++k) {
        const Nat M = g.block(k);
        const auto psi = character_grid(g, N, M - 1);
        double res = 0.0;
        for (Nat j = 0; j < M; ++j) res = std::max(res, max_abs_diff(D[M - j], D[M] - psi * D[j].conj()));
        E.residual("dn22", {{"n", str(k)}}, res, tol);
        E.residual("kn8", {{"n", str(k)}}, max_abs_diff(fejer_power(g, k, N), K[M]), tol);
    }

    for (Nat n = 1; n <= n_max; ++n) {
        E.residual("2dna", {{"n", str(n)}}, max_abs_diff(dirichlet(g, n, N), D[n]), tol);
        E.residual("kn10", {{"n", str(n)}}, max_abs_diff(fejer(g, n, N), K[n]), tol);
    }

    // Abel forms of the T means.
    const auto f = random_function(g, N, sub_seed(cfg.seed, 1, 0));
    std::vector<GridFunction> sigma{GridFunction::zeros(g, N)};
    for (Nat j = 1; j <= n_max; ++j) sigma.push_back(fejer_mean(f, j));
    auto weights = nonincreasing_weights();
    for (auto& w : nondecreasing_weights()) weights.push_back(w);
    for (const auto& q : weights) {
        const std::string qn = q.name();
        for (Nat n = 2; n <= n_max; ++n) {
            double abel = q.q(n - 1) * static_cast<double>(n - 1);
            double shifted = 0.0;
            for (Nat j = 0; j + 2 <= n; ++j)
                abel += (q.q(j) - q.q(j + 1)) * static_cast<double>(j);
            for (Nat j = 1; j < n; ++j) shifted += q.q(j);
            const double scale = std::max(1.0, std::abs(shifted));
            E.residual("T1.weights", {{"n", str(n)}, {"q", qn}}, std::abs(shifted - abel) / scale, tol);
            const double printed = std::abs(q.Q(n) - abel) / std::max(1.0, q.Q(n));
            if (q.q(0) == 0.0)
                E.residual("T1.weights-printed", {{"n", str(n)}, {"q", qn}}, printed, tol);
            else
                E.report("T1.weights-printed", {{"n", str(n)}, {"q", qn}}, printed,
                         "printed left side is Q_n; the Abel sum equals Q_n - q_0");

            const double Q = q.Q(n);
            if (!(Q > 0.0)) continue;
            auto rhs_k = K[n - 1] * Complex(q.q(n - 1) * static_cast<double>(n - 1));
            auto rhs_s = sigma[n - 1] * Complex(q.q(n - 1) * static_cast<double>(n - 1));
            for (Nat j = 1; j + 2 <= n; ++j) {
                const Complex c((q.q(j) - q.q(j + 1)) * static_cast<double>(j));
                rhs_k += K[j] * c;
                rhs_s += sigma[j] * c;
            }
            rhs_k *= Complex(1.0 / Q);
            rhs_s *= Complex(1.0 / Q);
            E.residual("T1.kernel", {{"n", str(n)}, {"q", qn}}, max_abs_diff(tmean_kernel(q, g, n, N), rhs_k), tol);
            E.residual("T1.means", {{"n", str(n)}, {"q", qn}}, max_abs_diff(t_mean(f, n, q), rhs_s), tol);
            if (q.q(0) > 0.0)
                E.report("T1.means-printed", {{"n", str(n)}, {"q", qn}}, max_abs_diff(norlund_mean(f, n, q), rhs_s),
                         "same right side against the Norlund mean t_n");
        }
    }

    for (int k = 1; k <= N; ++k) {
        const Nat M = g.block(k);
        const auto P = norlund_log_kernel(g, M, N);
        const auto Y = riesz_log_kernel(g, M, N);
        const auto psi = character_grid(g, N, M - 1);
        E.residual("lemma0nnT121.identity", {{"n", str(k)}}, max_abs_diff(P, D[M] - psi * Y.conj()), tol);
    }

    // Abel form of the Riesz kernel: printed boundary terms and the transform itself.
    {
        auto partial = GridFunction::zeros(g, N); // sum_{j=1}^{n-2} K_j / (j+1)
        for (Nat n = 2; n <= n_max; ++n) {
            if (n >= 3) partial += K[n - 2] * Complex(1.0 / static_cast<double>(n - 1));
            const double l = log_normalizer(n);
            const auto Y = riesz_log_kernel(g, n, N);
            const auto abel = (partial + K[n - 1]) * Complex(1.0 / l);
            const auto printed = (partial + K[n - 1] * Complex(1.0 / static_cast<double>(n)) + K[n]) * Complex(1.0 / l);
            E.report("reiszkernel.printed", {{"n", str(n)}}, max_abs_diff(Y, printed),
                     "residual of the printed boundary terms K_j/(j+1), j < n, plus K_n/l_n");
            E.residual("reiszkernel.abel", {{"n", str(n)}}, max_abs_diff(Y, abel), tol);
        }
    }
    return std::move(E.out);
}

// ---------------------------------------------------------------------------
// inequalities

std::vector<VerificationRecord> run_inequality_suite(const GroupSpec& g, const SuiteConfig& cfg) {
    Emitter E("inequalities", g);
    const std::string S = E.suite();
    const double mtol = cfg.margin_tol;
    const double lam = g.lambda();
    auto& out = E.out;
    const Nat top = g.block(g.levels());

    {
        Worst lo, up, wlo, wup;
        Sup dn, literal;
        double spot = 0.0;
        for (Nat n = 1; n <= cfg.n_max && n < top; ++n) {
            const auto nd = digits_of(n, g);
            if (nd.hi + 1 > g.levels()) break;
            const double L = lebesgue_constant(g, n);
            const auto b = lebesgue_bounds(g, n);
            const auto bl = lebesgue_bounds(g, n, VariationConvention::literal);
            literal.add(L - bl.upper, E.params({{"n", str(n)}}));
            lo.add(lower_check(S, "var1.lower", E.params({{"n", str(n)}}), L, b.lower, mtol));
            up.add(upper_check(S, "var1.upper", E.params({{"n", str(n)}}), L, b.upper, mtol));
            if (g.dyadic()) {
                const double V = walsh_variation(nd, VariationConvention::from_zero);
                wlo.add(lower_check(S, "var1.walsh-lower", E.params({{"n", str(n)}}), L, V / 8.0, mtol));
                wup.add(upper_check(S, "var1.walsh-upper", E.params({{"n", str(n)}}), L, V, mtol));
                if (n == 1) spot = std::max(spot, std::abs(L - 1.0));
                if (n == 3) spot = std::max(spot, std::abs(L - 1.5));
            }
            if (n >= 2) dn.add(L / std::log(static_cast<double>(n)), E.params({{"n", str(n)}}));
        }
        lo.emit(out);
        up.emit(out);
        wlo.emit(out);
        wup.emit(out);
        if (g.dyadic() && cfg.n_max >= 3) E.residual("var1.spot", {}, spot, cfg.tol);
        dn.emit(out, S, "Dn", "sup L_n / log n over 2 <= n <= n_max");
        literal.emit(out, S, "var1.literal-upper", "sup L_n - (v + v*) with v summed from j = 1");
    }

    for (int k = 0; k <= 8 && k + 1 <= g.levels() && g.block(k + 1) <= (Nat{1} << 16); ++k)
        E.residual("5aa", {{"n", str(k)}}, std::abs(lebesgue_constant(g, g.block(k)) - 1.0), cfg.tol);

    {
        Worst lo, up;
        for (int k = 1; 2 * k + 1 <= g.levels() && g.block(2 * k + 1) <= (Nat{1} << 16); ++k) {
            const Nat q = alternating_block_sum(g, k);
            const double L = lebesgue_constant(g, q);
            lo.add(lower_check(S, "Dnqn.lower", E.params({{"k", str(k)}}), L, k / (2.0 * lam), mtol));
            up.add(upper_check(S, "Dnqn.upper", E.params({{"k", str(k)}}), L, lam * k, mtol));
        }
        lo.emit(out);
        up.emit(out);
    }

    {
        Sup kn;
        Worst yano;
        for (Nat n = 1; n <= cfg.n_max && n < top; ++n) {
            const int R = digits_of(n, g).hi + 1;
            if (R > g.levels()) break;
            const double v = lp_norm(fejer(g, n, R), 1.0);
            kn.add(v, E.params({{"n", str(n)}}));
            if (g.dyadic()) yano.add(upper_check(S, "knbounded.yano", E.params({{"n", str(n)}}), v, 2.0, mtol));
        }
        kn.emit(out, S, "knbounded", "sup ||K_n||_1 over n <= n_max");
        yano.emit(out);
    }

    {
        Sup y;
        for (Nat n = 2; n <= std::min<Nat>(cfg.n_max, 256); ++n)
            y.add(lp_norm(riesz_log_kernel(g, n, working_rank(g, n)), 1.0), E.params({{"n", str(n)}}));
        y.emit(out, S, "reiszkernel.norm", "sup ||Y_n||_1");
        Sup pm;
        for (int k = 1; k <= g.levels() && g.block(k) <= std::max<Nat>(cfg.n_max, 2); ++k)
            pm.add(lp_norm(norlund_log_kernel(g, g.block(k), k), 1.0), E.params({{"n", str(k)}}));
        pm.emit(out, S, "lemma0nnT121.norm", "sup ||P_{M_n}||_1");
    }

    {
        auto weights = nonincreasing_weights();
        for (auto& w : nondecreasing_weights()) weights.push_back(w);
        for (const auto& q : weights) {
            Sup t2;
            for (Nat n = 2; n <= std::min<Nat>(cfg.n_max, 256); ++n) {
                if (!(q.Q(n) > 0.0)) continue;
                t2.add(lp_norm(tmean_kernel(q, g, n, working_rank(g, n)), 1.0),
                       E.params({{"n", str(n)}, {"q", q.name()}}));
            }
            t2.emit(out, S, "T2", std::string("sup ||F_n||_1, ") + std::string(to_string(q.declared())) + " weights");
        }
    }

    // Randomized norm inequalities at a rank with M_N <= 256.
    {
        const int N = rank_below(g, 256);
        std::map<std::string, Worst> young;
        std::map<std::string, Worst> watari;
        for (int s = 0; s < cfg.samples; ++s) {
            const auto f = random_function(g, N, sub_seed(cfg.seed, 2, static_cast<Nat>(s)));
            const auto h = random_function(g, N, sub_seed(cfg.seed, 3, static_cast<Nat>(s)));
            const auto c = convolve(f, h);
            const double h1 = lp_norm(h, 1.0);
            for (double p : {1.0, 2.0, kInfinity}) {
                const std::string ps = format_number(p);
                young[ps].add(upper_check(S, "covstrong", E.params({{"p", ps}, {"sample", str(s)}}), lp_norm(c, p),
                                          lp_norm(f, p) * h1, mtol));
            }
            for (int n = 0; n <= N; ++n) {
                const auto tail = f - partial_sum(f, g.block(n));
                for (double p : {1.0, 2.0}) {
                    const std::string ps = format_number(p);
                    const double w = modulus(f, p, n);
                    const double d = lp_norm(tail, p);
                    const Params at = E.params({{"p", ps}, {"n", str(n)}, {"sample", str(s)}});
                    watari["lower" + ps].add(lower_check(S, "eqvi.lower", at, d, 0.5 * w, mtol));
                    watari["upper" + ps].add(upper_check(S, "eqvi.upper", at, d, w, mtol));
                    if (p == 2.0) {
                        const double e = best_approx_l2(f, g.block(n));
                        watari["approx-lower"].add(lower_check(S, "eqvi.best-approx-lower", at, e, 0.5 * d, mtol));
                        watari["approx-upper"].add(upper_check(S, "eqvi.best-approx-upper", at, e, d, mtol));
                    }
                }
            }
        }
        for (auto& [_, w] : young) w.emit(out);
        for (auto& [_, w] : watari) w.emit(out);
    }
    return std::move(E.out);
}

// ---------------------------------------------------------------------------
// lemmas

namespace {

// Pointwise and shell-integral ratios for a family of kernels G_n against the
// lemma bounds; `tail_from` is M_N for the tail kernels and 0 for F_n.
struct ShellRatios {
    Sup pointwise_mn; // M_N |G| / sum M_j |K_{M_j}|
    Sup pointwise_n;  // n |G| / sum M_j |K_{M_j}|
    Sup all_shells;   // M_N^2/(M_k M_l) int
    Sup inner;        // n M_N/(M_k M_l) int, l <= N-1
    Sup edge;         // M_N/M_k int, l = N
};

void add_shell_ratios(ShellRatios& acc, const GroupSpec& g, const GridFunction& G, Nat n, int N,
                      const std::vector<GridFunction>& KM, const std::vector<std::pair<ShellDescriptor, std::vector<Nat>>>& shells,
                      const Params& at) {
    const int hi = digits_of(n, g).hi;
    const double MN = static_cast<double>(g.block(N));
    double pmn = 0.0, pn = 0.0;
    for (Nat x = 0; x < G.size(); ++x) {
        double den = 0.0;
        for (int j = 0; j <= hi; ++j) den += static_cast<double>(g.block(j)) * std::abs(KM[static_cast<std::size_t>(j)][x]);
        const double a = std::abs(G[x]);
        pmn = std::max(pmn, ratio_or_inf(MN * a, den));
        pn = std::max(pn, ratio_or_inf(static_cast<double>(n) * a, den));
    }
    acc.pointwise_mn.add(pmn, at);
    acc.pointwise_n.add(pn, at);
    double all = 0.0, inner = 0.0, edge = 0.0;
    for (const auto& [sh, idx] : shells) {
        const double Mk = static_cast<double>(g.block(sh.k));
        const double Ml = static_cast<double>(g.block(sh.l));
        for (Nat x : idx) {
            const double v = coset_abs_integral(G, N, x);
            all = std::max(all, v / (Mk * Ml / (MN * MN)));
            if (sh.l <= N - 1) inner = std::max(inner, v / (Mk * Ml / (static_cast<double>(n) * MN)));
            else edge = std::max(edge, v / (Mk / MN));
        }
    }
    acc.all_shells.add(all, at);
    acc.inner.add(inner, at);
    acc.edge.add(edge, at);
}

} // namespace

std::vector<VerificationRecord> run_lemma_suite(const GroupSpec& g, const SuiteConfig& cfg) {
    Emitter E("lemmas", g);
    const std::string S = E.suite();
    const Nat n_max = std::min<Nat>(std::max<Nat>(cfg.n_max, 4), 128);
    const int N = rank_below(g, std::max<Nat>(n_max / 4, 2));
    auto lemma = kernel_lemma_bounds(g, n_max, N, cfg.margin_tol);
    for (auto& r : lemma) E.out.push_back(std::move(r));

    const int R = std::max(N, working_rank(g, n_max));
    const Nat MN = g.block(N);
    std::vector<GridFunction> KM;
    for (int j = 0; j <= R; ++j) KM.push_back(fejer_power(g, j, R));
    std::vector<std::pair<ShellDescriptor, std::vector<Nat>>> shells;
    for (const auto& sh : coset_partition(g, N)) shells.emplace_back(sh, shell_indices(g, N, sh));
    const std::string Ns = str(N);

    for (const auto& q : nonincreasing_weights()) {
        ShellRatios acc;
        for (Nat n = MN + 1; n <= n_max; ++n) {
            const double Q = q.Q(n);
            const auto G = dirichlet_combination(g, n - 1, R, [&](Nat k) { return k >= MN ? q.q(k) / Q : 0.0; });
            add_shell_ratios(acc, g, G, n, N, KM, shells, E.params({{"N", Ns}, {"n", str(n)}, {"q", q.name()}}));
        }
        acc.pointwise_mn.emit(E.out, S, "lemma0nnT0", "sup M_N |tail| / sum_{j<=|n|} M_j |K_{M_j}|");
        acc.pointwise_n.emit(E.out, S, "lemma0nnT", "sup n |tail| / sum_{j<=|n|} M_j |K_{M_j}|");
        acc.all_shells.emit(E.out, S, "lemma5aaTin", "sup M_N^2/(M_k M_l) int_{I_N} |tail(x-t)| dt");
        acc.inner.emit(E.out, S, "lemma5a.inner", "sup n M_N/(M_k M_l) int_{I_N} |tail(x-t)| dt, l < N");
        acc.edge.emit(E.out, S, "lemma5a.edge", "sup M_N/M_k int_{I_N} |tail(x-t)| dt, l = N");
        acc.all_shells.emit(E.out, S, "lemma5bT", "sup over n >= M_N of M_N^2/(M_k M_l) int |tail(x-t)| dt");
    }

    for (const auto& q : nondecreasing_weights()) {
        ShellRatios acc, late;
        for (Nat n = 2; n <= n_max; ++n) {
            if (!(q.Q(n) > 0.0)) continue;
            const auto F = tmean_kernel(q, g, n, R);
            const Params at = E.params({{"N", Ns}, {"n", str(n)}, {"q", q.name()}});
            add_shell_ratios(n >= MN ? late : acc, g, F, n, N, KM, shells, at);
        }
        // Pointwise and inner/edge claims hold for every n; merge the two ranges.
        auto merge = [](Sup a, const Sup& b) {
            if (b.any) a.add(b.value, b.at);
            return a;
        };
        merge(acc.pointwise_n, late.pointwise_n).emit(E.out, S, "lemma0nnT1", "sup n |F_n| / sum_{j<=|n|} M_j |K_{M_j}|");
        merge(acc.inner, late.inner).emit(E.out, S, "lemma5aT.inner", "sup n M_N/(M_k M_l) int_{I_N} |F_n(x-t)| dt, l < N");
        merge(acc.edge, late.edge).emit(E.out, S, "lemma5aT.edge", "sup M_N/M_k int_{I_N} |F_n(x-t)| dt, l = N");
        late.all_shells.emit(E.out, S, "lemma5b", "sup over n >= M_N of M_N^2/(M_k M_l) int |F_n(x-t)| dt");
    }

    // Riesz and Norlund logarithmic kernels.
    {
        Sup inner, edge, annulus;
        GridFunction H = GridFunction::zeros(g, R); // sum_{j=M_N+1}^n |K_j| / (j+1)
        for (Nat n = 2; n <= n_max; ++n) {
            if (n > MN) H += fejer(g, n, R).abs() * Complex(1.0 / static_cast<double>(n + 1));
            const Params at = E.params({{"N", Ns}, {"n", str(n)}});
            if (n > MN) {
                const double l = log_normalizer(n);
                for (const auto& [sh, idx] : shells) {
                    const double Mk = static_cast<double>(g.block(sh.k));
                    const double Ml = static_cast<double>(g.block(sh.l));
                    for (Nat x : idx) {
                        const double v = coset_abs_integral(H, N, x);
                        if (sh.l <= N - 1) inner.add(v / (Mk * Ml / (static_cast<double>(MN) * MN)), at);
                        else edge.add(v / (Mk / static_cast<double>(MN) * l), at);
                    }
                }
            }
            const auto P = norlund_log_kernel(g, n, R);
            for (int s = 0; s < N; ++s)
                for (Nat x : annulus_indices(g, N, s))
                    annulus.add(coset_abs_integral(P, N, x) / (static_cast<double>(g.block(s)) / MN), at);
        }
        inner.emit(E.out, S, "l2.inner", "sup M_N^2/(M_k M_l) int_{I_N} sum_{j>M_N} |K_j(x-t)|/(j+1) dt");
        edge.emit(E.out, S, "l2.edge", "sup M_N/(M_k l_n) int_{I_N} sum_{j>M_N} |K_j(x-t)|/(j+1) dt");
        annulus.emit(E.out, S, "dn2.7", "sup M_N/M_s int_{I_N} |P_n(x-t)| dt on I_s \\ I_{s+1}");
    }
    return std::move(E.out);
}

// ---------------------------------------------------------------------------
// structure

std::vector<VerificationRecord> run_structure_suite(const GroupSpec& g, const SuiteConfig& cfg) {
    Emitter E("structure", g);
    const std::string S = E.suite();
    const double tol = cfg.tol;
    const double mtol = cfg.margin_tol;
    auto& out = E.out;
    const Nat nm = std::min<Nat>(std::max<Nat>(cfg.n_max, 2), 64);
    const int Rs = working_rank(g, nm);
    const Nat Ms = g.block(Rs);

    // group, digits and metric
    {
        Nat bad = 0;
        for (Nat x = 0; x < Ms; ++x) {
            const auto p = point_at(g, Rs, x);
            bad += index_of(g, p) != x;
            for (Nat y = 0; y < Ms; y += std::max<Nat>(1, Ms / 16)) {
                const auto q = point_at(g, Rs, y);
                bad += group_sub(g, group_add(g, p, q), q) != p;
                bad += index_sub(g, Rs, index_add(g, Rs, x, y), y) != x;
                bad += group_add(g, p, group_neg(g, p)) != point_at(g, Rs, 0);
            }
        }
        E.residual("group.operations", {{"N", str(Rs)}}, static_cast<double>(bad), 0.0);

        Nat bad_digits = 0;
        const Nat cap = std::min<Nat>(g.block(g.levels()), 4096);
        for (Nat n = 0; n < cap; ++n) bad_digits += from_digits(digits_of(n, g).digits, g) != n;
        E.residual("group.digits", {{"n_max", str(cap - 1)}}, static_cast<double>(bad_digits), 0.0);

        Nat bad_metric = 0;
        for (Nat x = 0; x < Ms; ++x) {
            const auto p = point_at(g, Rs, x);
            const double r = point_norm(g, p);
            bad_metric += !(r >= 0.0 && r < 1.0);
            bad_metric += point_distance(g, p, p) != 0.0;
            for (int n = 0; n <= Rs; ++n) {
                const bool in = x % g.block(n) == 0;
                bad_metric += in != (r < 1.0 / static_cast<double>(g.block(n)));
            }
            const auto q = point_at(g, Rs, (x * 7 + 3) % Ms);
            bad_metric += point_distance(g, p, q) != point_distance(g, q, p);
        }
        E.residual("metric", {{"N", str(Rs)}}, static_cast<double>(bad_metric), 0.0);
    }

    // digit functions, hat arithmetic, variation
    {
        Nat bad = 0, bad_hat = 0, bad_var = 0;
        for (Nat n = 1; n <= nm; ++n) {
            const auto d = digits_of(n, g);
            bad += !(g.block(d.hi) <= n && n < g.block(d.hi + 1));
            bad += n % g.block(d.lo) != 0 || d.digit(d.lo) == 0 || d.rho() != d.hi - d.lo;
            for (Nat k = 0; k <= nm; ++k) bad_hat += nat_hat_sub(nat_hat_add(n, k, g), k, g) != n;
            bad_hat += nat_hat_add(n, 0, g) != n;
            const int v = variation_v(d);
            const int vs = variation_vstar(d, g);
            bad_var += v < 1 || vs < 0;
            if (g.dyadic()) bad_var += v != walsh_variation(d) || vs != 0;
        }
        E.residual("digit-functions", {{"n_max", str(nm)}}, static_cast<double>(bad), 0.0);
        E.residual("hat-arithmetic", {{"n_max", str(nm)}}, static_cast<double>(bad_hat), 0.0);
        E.residual("variation", {{"n_max", str(nm)}}, static_cast<double>(bad_var), 0.0);

        double res = 0.0;
        for (Nat n = 1; n <= nm; ++n) {
            const int R = digits_of(n, g).hi + 2;
            if (R > g.levels()) break;
            res = std::max(res, std::abs(lebesgue_constant(g, n) - lp_norm(dirichlet(g, n, R), 1.0)));
        }
        E.residual("lebesgue.resolution", {{"n_max", str(nm)}}, res, tol);
    }

    // characters and the transform
    {
        const int Rc = rank_below(g, 64);
        const Nat Mc = g.block(Rc);
        std::vector<GridFunction> psi;
        for (Nat n = 0; n < Mc; ++n) psi.push_back(character_grid(g, Rc, n));
        double orth = 0.0, prod = 0.0;
        for (Nat n = 0; n < Mc; ++n)
            for (Nat k = 0; k < Mc; ++k) {
                const Complex ip = (psi[n] * psi[k].conj()).integral();
                orth = std::max(orth, std::abs(ip - Complex(n == k ? 1.0 : 0.0)));
                prod = std::max(prod, max_abs_diff(psi[n] * psi[k], psi[nat_hat_add(n, k, g)]));
            }
        E.residual("characters.orthonormal", {{"N", str(Rc)}}, orth, mtol);
        E.residual("characters.hat-product", {{"N", str(Rc)}}, prod, tol);

        const int Rt = rank_below(g, 4096);
        const int Rn = rank_below(g, 256);
        double trip = 0.0, planch = 0.0, naive = 0.0;
        for (int s = 0; s < cfg.samples; ++s) {
            const auto f = random_function(g, Rt, sub_seed(cfg.seed, 4, static_cast<Nat>(s)));
            const auto sp = transform_forward(f);
            trip = std::max(trip, max_abs_diff(transform_inverse(sp), f));
            double e = 0.0;
            for (auto c : sp.coeffs) e += std::norm(c);
            const double n2 = std::pow(lp_norm(f, 2.0), 2.0);
            planch = std::max(planch, std::abs(e - n2) / std::max(1.0, n2));
            if (s < 4) {
                const auto h = random_function(g, Rn, sub_seed(cfg.seed, 5, static_cast<Nat>(s)));
                const auto hs = transform_forward(h);
                for (Nat n = 0; n < h.size(); ++n) naive = std::max(naive, std::abs(hs.coeffs[n] - fourier_coeff(h, n)));
            }
        }
        E.residual("characters.round-trip", {{"N", str(Rt)}}, trip, tol);
        E.residual("characters.plancherel", {{"N", str(Rt)}}, planch, mtol);
        E.residual("characters.fast-vs-naive", {{"N", str(Rn)}}, naive, mtol);

        double spec = 0.0;
        for (int s = 0; s < cfg.samples; ++s) {
            const auto f = random_function(g, Rn, sub_seed(cfg.seed, 6, static_cast<Nat>(s)));
            const auto h = random_function(g, Rn, sub_seed(cfg.seed, 7, static_cast<Nat>(s)));
            const auto cs = transform_forward(convolve(f, h));
            const auto fs = transform_forward(f);
            const auto hs = transform_forward(h);
            for (Nat n = 0; n < f.size(); ++n) spec = std::max(spec, std::abs(cs.coeffs[n] - fs.coeffs[n] * hs.coeffs[n]));
        }
        E.residual("convolution.spectrum", {{"N", str(Rn)}}, spec, mtol);
    }

    // means against convolution with their kernels
    {
        const auto f = random_function(g, Rs, sub_seed(cfg.seed, 8, 0));
        std::map<std::string, double> res;
        auto check = [&](const std::string& claim, const MeanSpec& spec, Nat n) {
            res[claim] = std::max(res[claim], max_abs_diff(apply_mean(f, spec, n), convolve(f, mean_kernel(spec, g, n, Rs))));
        };
        double fejer_eq = 0.0;
        for (Nat n = 1; n <= nm; ++n) {
            res["partial-sums.kernel"] = std::max(res["partial-sums.kernel"],
                                                  max_abs_diff(partial_sum(f, n), convolve(f, dirichlet(g, n, Rs))));
            res["fejer-means.kernel"] =
                std::max(res["fejer-means.kernel"], max_abs_diff(fejer_mean(f, n), convolve(f, fejer(g, n, Rs))));
            for (const auto& q : {WeightSequence::harmonic(), WeightSequence::power(0.5)}) check("norlund-means.kernel", MeanSpec::norlund(q), n);
            fejer_eq = std::max(fejer_eq, max_abs_diff(norlund_mean(f, n, WeightSequence::constant()), fejer_mean(f, n)));
            for (const auto& q : {WeightSequence::harmonic(), WeightSequence::power(0.5), WeightSequence::iterated_log(1.0, 1)})
                if (q.Q(n) > 0.0) check("tmeans.kernel", MeanSpec::tmean(q), n);
            for (double a : {0.25, 0.5, 1.0}) check("cesaro.kernel", MeanSpec::cesaro(a), n);
            for (double a : {0.25, 0.5}) {
                check("cesaro.u-kernel", MeanSpec::u(a), n);
                check("cesaro.v-kernel", MeanSpec::v(a), n);
            }
            if (n >= 2) {
                check("log-means.riesz-kernel", MeanSpec::riesz_log(), n);
                check("log-means.norlund-kernel", MeanSpec::norlund_log(), n);
            }
        }
        for (const auto& [claim, r] : res) E.residual(claim, {{"n_max", str(nm)}}, r, mtol);
        E.residual("norlund-means.fejer", {{"n_max", str(nm)}}, fejer_eq, 0.0);
        E.residual("partial-sums.exact", {{"N", str(Rs)}}, max_abs_diff(partial_sum(f, Ms), f), tol);
    }

    // Cesaro numbers
    for (double a : {0.25, 0.5, 1.0}) {
        const CesaroCoeffs A(a, 64), B(a - 1.0, 64);
        double r0 = 0.0, r1 = 0.0;
        Worst lo, up;
        for (Nat n = 0; n <= 64; ++n) {
            double s = 0.0;
            for (Nat k = 0; k <= n; ++k) s += B(n - k);
            r0 = std::max(r0, std::abs(A(n) - s));
            if (n >= 1) r1 = std::max(r1, std::abs(A(n) - A(n - 1) - B(n)));
            if (n >= 8) {
                const double ratio = A(n) / std::pow(static_cast<double>(n), a);
                const Params at = E.params({{"alpha", format_number(a)}, {"n", str(n)}});
                lo.add(lower_check(S, "node01.asymptotic-lower", at, ratio, 0.5, mtol));
                up.add(upper_check(S, "node01.asymptotic-upper", at, ratio, 2.0, mtol));
            }
        }
        E.residual("node0", {{"alpha", format_number(a)}}, r0, mtol);
        E.residual("node01.difference", {{"alpha", format_number(a)}}, r1, mtol);
        lo.emit(out);
        up.emit(out);
    }

    // regularity of the weights
    for (const auto& q : {WeightSequence::constant(), WeightSequence::harmonic(), WeightSequence::power(0.5),
                          WeightSequence::power(1.5)}) {
        const auto rep = regularity_report(q, std::max<Nat>(cfg.n_max, 64));
        out.push_back(lower_check(S, "112.envelope", E.params({{"q", q.name()}}), rep.envelope && rep.monotone ? 1.0 : 0.0,
                                  1.0, 0.0));
        std::vector<double> ratios;
        for (const auto& row : rep.rows)
            if (row.n == 8 || row.n == 16 || row.n == 32 || row.n == 64) ratios.push_back(row.ratio);
        out.push_back(trend_record(S, "112.trend", E.params({{"q", q.name()}, {"n", "8,16,32,64"}}), ratios,
                                   "q_{n-1}/Q_n decreasing", false));
    }

    // maximal operators
    {
        const auto idx = range(1, nm);
        const auto idx2 = range(2, nm);
        Worst dom, nl;
        for (int s = 0; s < cfg.samples; ++s) {
            const auto f = random_function(g, Rs, sub_seed(cfg.seed, 9, static_cast<Nat>(s)));
            const auto sigma = weighted_maximal(f, MeanSpec::fejer(), idx);
            for (const auto& q : nonincreasing_weights()) {
                const auto T = weighted_maximal(f, MeanSpec::tmean(q), idx);
                double worst = -std::numeric_limits<double>::infinity();
                for (Nat x = 0; x < T.size(); ++x) worst = std::max(worst, T[x].real() - sigma[x].real());
                dom.add(upper_check(S, "weighted-maximal.domination",
                                    E.params({{"q", q.name()}, {"sample", str(s)}, {"n_max", str(nm)}}), worst, 0.0, mtol));
            }
            auto w = [](Nat n) { return static_cast<double>(n + 1); };
            const auto L = weighted_maximal(f, MeanSpec::norlund_log(), idx2, w);
            const auto Sm = weighted_maximal(f, MeanSpec::partial_sums(), idx, w);
            double worst = -std::numeric_limits<double>::infinity();
            for (Nat x = 0; x < L.size(); ++x) worst = std::max(worst, L[x].real() - Sm[x].real());
            nl.add(upper_check(S, "norlund-log-maximal", E.params({{"p", "0.5"}, {"sample", str(s)}}), worst, 0.0, mtol));
        }
        dom.emit(out);
        nl.emit(out);
    }

    // martingales
    {
        const auto f = random_function(g, Rs, sub_seed(cfg.seed, 10, 0));
        const auto mart = regular_martingale(f);
        double cons = 0.0;
        for (std::size_t i = 0; i < mart.size(); ++i)
            cons = std::max(cons, max_abs_diff(coarsen(mart.finest(), mart.levels()[i]), mart.entries()[i]));
        E.residual("martingales.consistency", {{"N", str(Rs)}}, cons, tol);

        double g100 = 0.0;
        for (int n = 0; n <= Rs; ++n) {
            const auto tail = tail_martingale(f, n);
            const auto diff = f - partial_sum(f, g.block(n));
            for (std::size_t i = 0; i < tail.size(); ++i)
                g100 = std::max(g100, max_abs_diff(tail.entries()[i], coarsen(diff, tail.levels()[i])));
        }
        E.residual("g100", {{"N", str(Rs)}}, g100, mtol);

        const auto fstar = maximal_function(mart);
        double lowest = std::numeric_limits<double>::infinity();
        for (Nat x = 0; x < f.size(); ++x) lowest = std::min(lowest, fstar[x].real() - std::abs(f[x]));
        out.push_back(lower_check(S, "maximal-function.dominates", E.params({{"N", str(Rs)}}), lowest, 0.0, tol));

        std::vector<double> sup(f.size(), 0.0);
        for (int n = 0; n <= Rs; ++n) {
            const auto s = partial_sum(f, g.block(n));
            for (Nat x = 0; x < f.size(); ++x) sup[x] = std::max(sup[x], std::abs(s[x]));
        }
        double r = 0.0;
        for (Nat x = 0; x < f.size(); ++x) r = std::max(r, std::abs(fstar[x].real() - sup[x]));
        E.residual("lemma2.3.4", {{"N", str(Rs)}}, r, mtol);

        for (double p : {1.0, 2.0}) {
            double worst = -std::numeric_limits<double>::infinity();
            for (int n = 0; n < Rs; ++n) worst = std::max(worst, modulus(f, p, n + 1) - modulus(f, p, n));
            out.push_back(upper_check(S, "modulus.monotone", E.params({{"p", format_number(p)}, {"N", str(Rs)}}),
                                      worst, 0.0, mtol));
        }
    }

    // atoms
    if (Rs >= 2) {
        const double p = 0.5;
        const double scale = std::pow(static_cast<double>(g.block(1)), 1.0 / p);
        std::vector<std::pair<double, Atom>> coeffs;
        const double lams[] = {0.5, 0.25};
        for (int a = 0; a < 2; ++a) {
            Point anchor{{a}};
            const auto values = GridFunction::from_index(g, Rs, [&](Nat x) {
                if (static_cast<int>(x % g.block(1)) != a) return Complex();
                return scale * g.root(1, (x / g.block(1)) % static_cast<Nat>(g.radix(1)));
            });
            coeffs.emplace_back(lams[a], make_atom(p, Coset{1, anchor}, values));
        }
        for (const auto& [l, atom] : coeffs)
            out.push_back(upper_check(S, "condmart.atom-norm", E.params({{"p", "0.5"}, {"anchor", str(atom.support.anchor.digits[0])}}),
                                      hardy_quasinorm(regular_martingale(atom.values), p), 1.0, mtol));
        const auto am = atom_martingale(coeffs);
        double r = 0.0;
        for (std::size_t i = 0; i < am.mart.size(); ++i) {
            const int n = am.mart.levels()[i];
            auto expect = GridFunction::zeros(g, Rs);
            for (const auto& [l, atom] : coeffs) expect += partial_sum(atom.values, g.block(n)) * Complex(l);
            r = std::max(r, max_abs_diff(am.mart.entries()[i], coarsen(expect, n)));
        }
        E.residual("condmart", {{"N", str(Rs)}}, r, mtol);
        E.report("condmart.quasinorm", {{"p", "0.5"}}, std::pow(hardy_quasinorm(am.mart, p), p) / am.lambda_p_sum,
                 "||f||_{H_p}^p / sum |lambda_k|^p");
    }
    return std::move(E.out);
}

// ---------------------------------------------------------------------------
// strong sums and probes

std::vector<StrongSumRow> strong_sum(const StepMartingale& mart, const StrongSumSpec& spec, Nat n_max,
                                     std::span<const Nat> checkpoints) {
    const auto& f = mart.finest();
    require(n_max <= f.size(), ErrorKind::range, "n_max exceeds the resolution of the martingale");
    const double p = spec.p;
    require(p > 0.0, ErrorKind::domain, "p must be positive");
    const double surrogate = std::pow(hardy_quasinorm(mart, p), p);
    const std::set<Nat> wanted(checkpoints.begin(), checkpoints.end());
    std::vector<StrongSumRow> rows;
    double sum = 0.0;
    for (Nat n = 1; n <= n_max; ++n) {
        double term = 0.0;
        if (!(is_log_mean(spec.mean.kind) && n < 2)) {
            const auto m = apply_mean(f, spec.mean, n);
            const double norm = spec.norm == NormKind::lp ? lp_norm(m, p) : hardy_quasinorm(regular_martingale(m), p);
            term = (spec.weight ? spec.weight(n) : 1.0) * std::pow(norm, p);
        }
        sum += term;
        if (!wanted.empty() && !wanted.contains(n)) continue;
        StrongSumRow row;
        row.n = n;
        row.term = term;
        row.sum = sum;
        row.normalized = (spec.normalizer ? spec.normalizer(n) : 1.0) * sum;
        row.ratio = surrogate > 0.0 ? row.normalized / surrogate
                                    : (row.normalized == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
        rows.push_back(row);
    }
    return rows;
}

std::vector<ProbeRow> divergence_probe(const StepMartingale& mart, const MeanSpec& mean, double p,
                                       std::span<const Nat> checkpoints, const std::function<double(Nat)>& weight,
                                       const std::function<double(Nat)>& bound) {
    require(p > 0.0, ErrorKind::domain, "p must be positive");
    std::vector<ProbeRow> rows;
    for (Nat n : checkpoints) {
        ProbeRow row;
        row.index = n;
        row.value = weak_lp(apply_mean(mart.finest(), mean, n), p);
        row.scaled = weight ? row.value / weight(n) : row.value;
        if (bound) {
            row.bound = bound(n);
            row.margin = row.scaled - *row.bound;
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<Nat> probe_checkpoints(const GroupSpec& g, CounterexampleKind kind, std::span<const int> alpha) {
    std::vector<Nat> out;
    for (int a : alpha) out.push_back(kind == CounterexampleKind::hp_blocks ? g.block(a) + 2 : 2 * g.block(a));
    return out;
}

TProbe t_mean_probe(const GroupSpec& g, const CounterexampleParams& params, double tol) {
    auto ex = counterexample(g, CounterexampleKind::hp_blocks, params);
    const double p = ex.params.p;
    const auto& alpha = ex.params.alpha;
    const auto cps = probe_checkpoints(g, CounterexampleKind::hp_blocks, alpha);
    std::map<Nat, int> alpha_at;
    for (std::size_t k = 0; k < alpha.size(); ++k) alpha_at[cps[k]] = alpha[k];
    auto bound = [&](Nat n) {
        const int a = alpha_at.at(n);
        return std::pow(static_cast<double>(g.block(a)), 1.0 / p - 2.0) / (16.0 * a);
    };
    TProbe out{ex, divergence_probe(ex.mart, MeanSpec::tmean(WeightSequence::constant()), p, cps, {}, bound), {}};
    const std::string m = radix_list(g);
    std::vector<double> bounds;
    for (std::size_t k = 0; k < out.rows.size(); ++k) {
        const auto& row = out.rows[k];
        bounds.push_back(*row.bound);
        out.records.push_back(lower_check("strong", "theorem1T.probe",
                                          {{"m", m}, {"p", format_number(p)}, {"alpha", std::to_string(alpha[k])},
                                           {"n", str(row.index)}, {"rank", std::to_string(ex.params.rank)}},
                                          row.value, *row.bound, tol));
    }
    out.records.push_back(trend_record("strong", "theorem1T.trend",
                                       {{"m", m}, {"p", format_number(p)}, {"alpha", join(alpha)},
                                        {"rank", std::to_string(ex.params.rank)}},
                                       bounds, "lower-bound expression M_{alpha_k}^{1/p-2}/(16 alpha_k) across k"));
    return out;
}

std::vector<VerificationRecord> run_strong_suite(const GroupSpec& g, const SuiteConfig& cfg) {
    Emitter E("strong", g);
    const std::string S = E.suite();
    auto& out = E.out;
    const Nat nm = std::min<Nat>(std::max<Nat>(cfg.n_max, 2), 64);
    const int Rf = working_rank(g, nm);
    auto nlogn = [](Nat n) { return n >= 2 ? 1.0 / (static_cast<double>(n) * std::log(static_cast<double>(n))) : 0.0; };

    // bounded-side sums on random functions and on psi_1
    {
        std::vector<std::pair<std::string, GridFunction>> fs;
        fs.emplace_back("psi_1", character_grid(g, Rf, 1));
        for (int s = 0; s < std::min(cfg.samples, 4); ++s)
            fs.emplace_back("random:" + std::to_string(s), random_function(g, Rf, sub_seed(cfg.seed, 11, static_cast<Nat>(s))));
        Sup t1, simon, sigma, riesz, sub;
        for (const auto& [name, f] : fs) {
            const auto mart = regular_martingale(f);
            auto sup_ratio = [&](const StrongSumSpec& spec, Sup& acc) {
                for (const auto& row : strong_sum(mart, spec, nm))
                    if (row.n >= 2) acc.add(row.ratio, E.params({{"f", name}, {"n", str(row.n)}}));
            };
            sup_ratio({MeanSpec::partial_sums(), 1.0, {}, nlogn, NormKind::lp}, t1);
            sup_ratio({MeanSpec::partial_sums(), 0.5, [](Nat k) { return std::pow(static_cast<double>(k), -1.5); }, {},
                       NormKind::lp},
                      simon);
            sup_ratio({MeanSpec::fejer(), 0.5, {}, nlogn, NormKind::lp}, sigma);
            const double p = 0.4;
            sup_ratio({MeanSpec::riesz_log(), p,
                       [p](Nat k) {
                           return std::pow(std::log(static_cast<double>(k)), p) / std::pow(static_cast<double>(k), 2.0 - 2.0 * p);
                       },
                       {}, NormKind::hardy},
                      riesz);
            const double hp = hardy_quasinorm(mart, p);
            for (Nat n = 1; n <= nm; ++n) {
                const auto d = digits_of(n, g);
                const double scale = std::pow(static_cast<double>(g.block(d.lo)) / static_cast<double>(g.block(d.hi)), 1.0 / p - 2.0);
                const double v = hardy_quasinorm(regular_martingale(fejer_mean(f, n)), p);
                sub.add(ratio_or_inf(scale * v, hp), E.params({{"f", name}, {"n", str(n)}, {"p", "0.4"}}));
            }
        }
        t1.emit(out, S, "theorem1.bounded", "sup (1/(n log n)) sum_{k<=n} ||S_k f||_1 / ||f||_{H_1}");
        simon.emit(out, S, "theorem1.simon", "sum ||S_k f||_p^p / k^{2-p} over ||f||_{H_p}^p, p = 1/2");
        sigma.emit(out, S, "theorem1sigma.bounded", "sup (1/(n log n)) sum ||sigma_k f||_{1/2}^{1/2} / ||f||_{H_{1/2}}^{1/2}");
        riesz.emit(out, S, "threisz_2", "sum log^p k ||R_k f||_{H_p}^p / k^{2-2p} over ||f||_{H_p}^p, p = 0.4");
        sub.emit(out, S, "theorem1sub.bounded", "sup (M_<n>/M_|n|)^{1/p-2} ||sigma_n f||_{H_p} / ||f||_{H_p}, p = 0.4");
    }

    // growth along the counterexample martingales
    const std::vector<int> alpha{1, 2, 3};
    if (g.levels() >= alpha.back() + 1) {
        for (auto kind : {CounterexampleKind::strong_partial_sums, CounterexampleKind::strong_fejer}) {
            CounterexampleParams params{alpha, 0.4, 0};
            auto ex = counterexample(g, kind, params);
            for (auto r : ex.records) {
                r.suite = S;
                out.push_back(std::move(r));
            }
            const auto cps = probe_checkpoints(g, kind, alpha);
            const bool partial = kind == CounterexampleKind::strong_partial_sums;
            StrongSumSpec spec{partial ? MeanSpec::partial_sums() : MeanSpec::fejer(), partial ? 1.0 : 0.5, {},
                               [](Nat n) { return 1.0 / (static_cast<double>(n) * default_phi(static_cast<double>(n))); },
                               NormKind::lp};
            std::vector<double> values;
            for (const auto& row : strong_sum(ex.mart, spec, cps.back(), cps)) values.push_back(row.normalized);
            out.push_back(trend_record(S, partial ? "theorem1.growth" : "theorem1sigma.growth",
                                       E.params({{"alpha", join(alpha)}, {"n", join(cps)}, {"rank", str(ex.params.rank)}}), values,
                                       partial ? "(1/(n phi_n)) sum_{k<=n} ||S_k f||_1 at n = 2 M_alpha"
                                               : "(1/(n phi_n)) sum_{k<=n} ||sigma_k f||_{1/2}^{1/2} at n = 2 M_alpha"));
        }

        const int rank = std::min(8, g.levels());
        CounterexampleParams params{alpha, 0.4, rank};
        auto probe = t_mean_probe(g, params, cfg.margin_tol);
        for (auto r : probe.example.records) {
            r.suite = S;
            out.push_back(std::move(r));
        }
        for (auto& r : probe.records) out.push_back(r);

    }

    // Sharpness of the sigma_n bound on H_p: f-hat = M_h^{1/2p} M_1^{(1/p-2)/2} on [M_h, M_{h+1}),
    // probed at n = M_h + M_1, so rho(n) = h - 1 grows; Phi = 1.
    {
        const double p = 0.4;
        std::vector<int> hs;
        for (int h : {3, 5, 7})
            if (h + 1 <= g.levels()) hs.push_back(h);
        if (hs.size() >= 2) {
            const int R = hs.back() + 1;
            Spectrum sp{g, R, std::vector<Complex>(g.block(R))};
            const double low = std::pow(static_cast<double>(g.block(1)), (1.0 / p - 2.0) / 2.0);
            for (int h : hs) {
                const double c = std::pow(static_cast<double>(g.block(h)), 1.0 / (2.0 * p)) * low;
                for (Nat j = g.block(h); j < g.block(h + 1); ++j) sp.coeffs[j] = c;
            }
            const auto mart = regular_martingale(transform_inverse(sp));
            std::vector<Nat> cps;
            for (int h : hs) cps.push_back(g.block(h) + g.block(1));
            std::vector<double> values;
            for (const auto& row : divergence_probe(mart, MeanSpec::fejer(), p, cps)) values.push_back(row.value);
            out.push_back(trend_record(S, "theorem1sub.growth",
                                       E.params({{"h", join(hs)}, {"n", join(cps)}, {"p", "0.4"}, {"rank", str(R)}}), values,
                                       "||sigma_n f||_{weak-L_p} at n = M_h + M_1, Phi = 1"));
        }
    }
    return std::move(E.out);
}

std::vector<VerificationRecord> run_suite(std::string_view name, const GroupSpec& g, const SuiteConfig& cfg) {
    std::vector<VerificationRecord> out;
    auto add = [&](std::vector<VerificationRecord> r) {
        for (auto& x : r) out.push_back(std::move(x));
    };
    const bool all = name == "all";
    bool known = all;
    if (all || name == "identities") add(run_identity_suite(g, cfg)), known = true;
    if (all || name == "inequalities") add(run_inequality_suite(g, cfg)), known = true;
    if (all || name == "lemmas") add(run_lemma_suite(g, cfg)), known = true;
    if (all || name == "structure") add(run_structure_suite(g, cfg)), known = true;
    if (all || name == "strong") add(run_strong_suite(g, cfg)), known = true;
    if (!known) fail(ErrorKind::invalid_params, "unknown suite: " + std::string(name));
    sort_records(out);
    return out;
}

} // namespace vilenkin
