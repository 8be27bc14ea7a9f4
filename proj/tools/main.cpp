// vilenkin: command-line front end over the library.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "vilenkin/characters.hpp"
#include "vilenkin/io.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/means.hpp"
#include "vilenkin/verify.hpp"

using namespace vilenkin;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Common {
    std::string m = "2";
    int levels = 0; // 0: chosen per command
    std::string format = "csv";
    double tol = 1e-10;
    std::uint64_t seed = 1;
    std::string out = "-";
};

void add_common(CLI::App* app, Common& c, const std::string& default_format = "csv") {
    c.format = default_format;
    app->add_option("--m", c.m, "radices, comma separated; repeated cyclically up to --levels")->capture_default_str();
    app->add_option("--levels", c.levels, "number of levels (default: enough for the command)")->check(CLI::Range(1, 62));
    app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app->add_option("--tol", c.tol, "tolerance")->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--seed", c.seed, "seed for random test functions")->capture_default_str();
    app->add_option("--out", c.out, "output path, - for stdout")->capture_default_str();
}

std::vector<int> int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || ptr != item.data() + item.size())
            fail(ErrorKind::invalid_params, "not an integer list: '" + s + "'");
        out.push_back(v);
    }
    return out;
}

// Levels: explicit, or the smallest count with M_levels >= need (at least `floor`).
GroupSpec build_group(const Common& c, Nat need = 1, int floor = 1) {
    const auto pattern = int_list(c.m);
    if (pattern.empty()) fail(ErrorKind::invalid_params, "--m needs at least one radix");
    if (c.levels > 0) return make_group(pattern, c.levels);
    int L = std::max<int>(floor, static_cast<int>(pattern.size()));
    while (make_group(pattern, L).block(L) < need) ++L;
    return make_group(pattern, L);
}

WeightSequence parse_weights(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    std::vector<double> args;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) args.push_back(std::stod(item));
    }
    auto arg = [&](std::size_t i, double def) { return i < args.size() ? args[i] : def; };
    if (name == "constant") return WeightSequence::constant(arg(0, 1.0));
    if (name == "harmonic") return WeightSequence::harmonic();
    if (name == "power") return WeightSequence::power(arg(0, 0.5));
    if (name == "cesaro") return WeightSequence::cesaro(arg(0, 0.5));
    if (name == "iterated_log") return WeightSequence::iterated_log(arg(0, 1.0), static_cast<int>(arg(1, 1.0)));
    fail(ErrorKind::invalid_params, "unknown weights '" + spec + "' (constant, harmonic, power:a, cesaro:a, iterated_log:a,b)");
}

Table grid_table(const GridFunction& f, const std::string& index_name = "index") {
    Table t;
    t.header = {index_name, "re", "im"};
    for (Nat i = 0; i < f.size(); ++i)
        t.rows.push_back({std::to_string(i), format_number(f[i].real()), format_number(f[i].imag())});
    return t;
}

void emit_grid(const Common& c, const GridFunction& f, const std::string& index_name = "index") {
    write_text(c.out, c.format == "json" ? grid_to_json(f) : to_csv(grid_table(f, index_name)));
}

void emit_table(const Common& c, const Table& t) { write_text(c.out, c.format == "json" ? to_json(t) : to_csv(t)); }

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vilenkin-group harmonic analysis: kernels, means, Lebesgue constants, Hardy-space probes"};
    app.require_subcommand(1);

    // group
    Common gc;
    std::optional<Nat> group_n;
    auto* group = app.add_subcommand("group", "block sizes M_k, or the digit data of --n");
    add_common(group, gc);
    group->add_option("--n", group_n, "natural number to expand");

    // kernel
    Common kc;
    std::string kernel_kind = "dirichlet";
    Nat kernel_n = 1;
    int kernel_res = -1;
    std::string kernel_weights = "harmonic";
    auto* kernel = app.add_subcommand("kernel", "kernel values on the rank-N grid");
    add_common(kernel, kc);
    kernel->add_option("--kind", kernel_kind)
        ->check(CLI::IsMember({"dirichlet", "fejer", "norlund", "tmean", "riesz_log", "norlund_log"}))
        ->capture_default_str();
    kernel->add_option("--n", kernel_n)->capture_default_str();
    kernel->add_option("--res", kernel_res, "grid resolution N (default: smallest N with M_N >= n)");
    kernel->add_option("--weights", kernel_weights, "weights for norlund/tmean")->capture_default_str();

    // lebesgue
    Common lc;
    std::vector<std::string> lebesgue_m;
    Nat lebesgue_max = 64;
    std::string lebesgue_variation = "from-zero";
    auto* lebesgue = app.add_subcommand("lebesgue", "L_n = ||D_n||_1 with the two-sided variation bounds");
    add_common(lebesgue, lc);
    lebesgue->remove_option(lebesgue->get_option("--m"));
    lebesgue->add_option("--m", lebesgue_m, "radix pattern; repeat the option for several groups");
    lebesgue->add_option("--max-n", lebesgue_max)->check(CLI::PositiveNumber)->capture_default_str();
    lebesgue->add_option("--variation", lebesgue_variation, "indexing of the variation sum")
        ->check(CLI::IsMember({"literal", "from-zero"}))
        ->capture_default_str();

    // mean
    Common mc;
    std::string mean_kind = "fejer";
    Nat mean_n = 1;
    double mean_alpha = 1.0;
    std::string mean_weights = "harmonic";
    std::string mean_input;
    int mean_res = 4;
    auto* mean = app.add_subcommand("mean", "a summability mean of a grid function");
    add_common(mean, mc, "json");
    mean->add_option("--kind", mean_kind)
        ->check(CLI::IsMember({"partial_sum", "fejer", "cesaro", "u", "v", "riesz_log", "norlund_log", "norlund", "tmean"}))
        ->capture_default_str();
    mean->add_option("--n", mean_n)->capture_default_str();
    mean->add_option("--alpha", mean_alpha, "order of the Cesaro-type means")->capture_default_str();
    mean->add_option("--weights", mean_weights, "weights for norlund/tmean")->capture_default_str();
    mean->add_option("--input", mean_input, "GridFunction JSON (default: seeded random function)");
    mean->add_option("--res", mean_res, "resolution of the random function")->capture_default_str();

    // transform
    Common tc;
    std::string transform_input;
    int transform_res = 4;
    bool transform_inverse_flag = false;
    auto* transform = app.add_subcommand("transform", "Vilenkin-Fourier coefficients (or the inverse)");
    add_common(transform, tc, "json");
    transform->add_option("--input", transform_input, "GridFunction JSON (default: seeded random function)");
    transform->add_option("--res", transform_res, "resolution of the random function")->capture_default_str();
    transform->add_flag("--inverse", transform_inverse_flag, "treat the input values as coefficients");

    // verify
    Common vc;
    std::string suite = "all";
    Nat verify_max = 64;
    int samples = 20;
    double margin_tol = 1e-10;
    std::string csv_path;
    auto* verify = app.add_subcommand("verify", "run verification suites; exit 1 if any check or trend fails");
    add_common(verify, vc, "json");
    vc.tol = 1e-12;
    verify->get_option("--tol")->description("residual tolerance for identities")->default_str("1e-12");
    verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names()))->capture_default_str();
    verify->add_option("--max-n", verify_max)->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--samples", samples, "random functions per randomized claim")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--margin-tol", margin_tol, "allowed negative margin of inequalities")->capture_default_str();
    verify->add_option("--csv", csv_path, "also write the report as CSV");

    // counterexample
    Common cc;
    std::string ce_kind = "hp-blocks";
    std::string ce_alpha = "1,2,3";
    double ce_p = 0.4;
    int ce_rank = 0;
    std::string ce_probe;
    auto* counter = app.add_subcommand("counterexample", "counterexample martingale plus its probe table");
    add_common(counter, cc);
    counter->add_option("--kind", ce_kind)
        ->check(CLI::IsMember({"strong-partial-sums", "strong-fejer", "hp-blocks"}))
        ->capture_default_str();
    counter->add_option("--alpha", ce_alpha, "strictly increasing block indices")->capture_default_str();
    counter->add_option("--p", ce_p, "atom exponent for hp-blocks")->capture_default_str();
    counter->add_option("--rank", ce_rank, "finest resolution (0: smallest that holds every block)");
    counter->add_option("--probe", ce_probe, "probe table path (CSV, or JSON with --format json)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*group) {
            const auto g = build_group(gc, group_n ? *group_n + 1 : 1);
            Table t;
            if (group_n) {
                const auto d = digits_of(*group_n, g);
                t.header = {"n", "digits", "abs", "lowest", "rho", "v", "vstar"};
                std::string digits;
                for (int j = 0; j <= d.hi; ++j) digits += (j ? "," : "") + std::to_string(d.digit(j));
                t.rows.push_back({std::to_string(*group_n), digits, std::to_string(d.hi), std::to_string(d.lo),
                                  std::to_string(d.rho()), std::to_string(variation_v(d)),
                                  std::to_string(variation_vstar(d, g))});
            } else {
                t.header = {"k", "m_k", "M_k"};
                for (int k = 0; k <= g.levels(); ++k)
                    t.rows.push_back({std::to_string(k), k < g.levels() ? std::to_string(g.radix(k)) : "",
                                      std::to_string(g.block(k))});
            }
            emit_table(gc, t);
        } else if (*kernel) {
            if (kernel_n < 1) fail(ErrorKind::invalid_params, "--n must be >= 1");
            const auto probe = build_group(kc, kernel_n, std::max(kernel_res, 1));
            const int N = kernel_res >= 0 ? kernel_res : working_rank(probe, kernel_n);
            const auto kind = kernel_kind_from_string(kernel_kind);
            std::optional<WeightSequence> q;
            if (kind == KernelKind::norlund || kind == KernelKind::tmean) q = parse_weights(kernel_weights);
            emit_grid(kc, make_kernel(kind, probe, kernel_n, N, q ? &*q : nullptr), "x");
        } else if (*lebesgue) {
            if (lebesgue_m.empty()) lebesgue_m.push_back("2");
            const auto conv = lebesgue_variation == "literal" ? VariationConvention::literal : VariationConvention::from_zero;
            Table t;
            t.header = {"m", "n", "L_n", "v", "vstar", "lower", "upper", "pass"};
            bool ok = true;
            for (const auto& m : lebesgue_m) {
                Common c = lc;
                c.m = m;
                auto g = build_group(c, lebesgue_max + 1, 1);
                if (lc.levels == 0) g = make_group(int_list(m), working_rank(g, lebesgue_max + 1) + 1);
                for (Nat n = 1; n <= lebesgue_max; ++n) {
                    const double L = lebesgue_constant(g, n);
                    const auto b = lebesgue_bounds(g, n, conv);
                    const bool pass = L >= b.lower - lc.tol && L <= b.upper + lc.tol;
                    ok = ok && pass;
                    t.rows.push_back({m, std::to_string(n), format_number(L), std::to_string(b.v), std::to_string(b.vstar),
                                      format_number(b.lower), format_number(b.upper), pass ? "pass" : "fail"});
                }
            }
            emit_table(lc, t);
            return ok ? 0 : kExitFail;
        } else if (*mean) {
            GridFunction f = mean_input.empty() ? random_function(build_group(mc, 1, mean_res), mean_res, mc.seed)
                                                : grid_from_json(read_text(mean_input));
            const auto kind = mean_kind_from_string(mean_kind);
            MeanSpec spec{kind, mean_alpha, std::nullopt};
            if (kind == MeanKind::v) spec = MeanSpec::v(mean_alpha);
            if (kind == MeanKind::norlund || kind == MeanKind::tmean) spec.weights = parse_weights(mean_weights);
            emit_grid(mc, apply_mean(f, spec, mean_n));
        } else if (*transform) {
            GridFunction f = transform_input.empty()
                                 ? random_function(build_group(tc, 1, transform_res), transform_res, tc.seed)
                                 : grid_from_json(read_text(transform_input));
            if (transform_inverse_flag) {
                emit_grid(tc, transform_inverse(Spectrum{f.group(), f.resolution(), std::vector<Complex>(f.values().begin(), f.values().end())}));
            } else {
                const auto s = transform_forward(f);
                emit_grid(tc, GridFunction(s.group, s.resolution, s.coeffs), "n");
            }
        } else if (*verify) {
            const auto probe = build_group(vc, verify_max + 1, 8);
            const auto g = vc.levels > 0 ? probe
                                         : make_group(int_list(vc.m), std::max(8, working_rank(probe, verify_max + 1) + 1));
            SuiteConfig cfg{verify_max, vc.tol, margin_tol, vc.seed, samples};
            const auto records = run_suite(suite, g, cfg);
            write_text(vc.out, vc.format == "json" ? records_to_json(records) : records_to_csv(records));
            if (!csv_path.empty()) write_text(csv_path, records_to_csv(records));
            std::size_t failed = 0;
            for (const auto& r : records) failed += r.kind != RecordKind::report && !r.pass;
            if (failed) {
                std::cerr << failed << " of " << records.size() << " records failed:";
                for (const auto& r : records)
                    if (r.kind != RecordKind::report && !r.pass) std::cerr << ' ' << r.claim;
                std::cerr << '\n';
                return kExitFail;
            }
        } else if (*counter) {
            const auto alpha = int_list(ce_alpha);
            const auto kind = counterexample_kind_from_string(ce_kind);
            const int top = alpha.empty() ? 1 : *std::max_element(alpha.begin(), alpha.end()) + 2;
            const auto g = build_group(cc, 1, std::max({top, ce_rank, 1}));
            CounterexampleParams params{alpha, ce_p, ce_rank};
            Table t;
            std::vector<VerificationRecord> records;
            Counterexample ex = counterexample(g, kind, params);
            if (kind == CounterexampleKind::hp_blocks) {
                auto probe = t_mean_probe(g, params, cc.tol);
                t.header = {"alpha", "n", "weak_lp", "bound", "margin"};
                for (std::size_t k = 0; k < probe.rows.size(); ++k) {
                    const auto& r = probe.rows[k];
                    t.rows.push_back({std::to_string(alpha[k]), std::to_string(r.index), format_number(r.value),
                                      format_number(*r.bound), format_number(r.margin)});
                }
                records = probe.records;
            } else {
                const auto cps = probe_checkpoints(g, kind, alpha);
                const bool partial = kind == CounterexampleKind::strong_partial_sums;
                StrongSumSpec spec{partial ? MeanSpec::partial_sums() : MeanSpec::fejer(), partial ? 1.0 : 0.5, {},
                                   [](Nat n) { return 1.0 / (static_cast<double>(n) * default_phi(static_cast<double>(n))); },
                                   NormKind::lp};
                t.header = {"alpha", "n", "sum", "normalized", "ratio"};
                std::vector<double> values;
                const auto rows = strong_sum(ex.mart, spec, std::min<Nat>(cps.back(), ex.mart.finest().size()), cps);
                for (std::size_t k = 0; k < rows.size(); ++k) {
                    t.rows.push_back({std::to_string(alpha[k]), std::to_string(rows[k].n), format_number(rows[k].sum),
                                      format_number(rows[k].normalized), format_number(rows[k].ratio)});
                    values.push_back(rows[k].normalized);
                }
                records.push_back(trend_record("counterexample", partial ? "theorem1.growth" : "theorem1sigma.growth",
                                               {{"alpha", join(alpha)}}, values));
            }
            for (const auto& r : ex.records) records.push_back(r);
            const std::string table = cc.format == "json" ? to_json(t) : to_csv(t);
            if (cc.out == "-" && ce_probe.empty()) {
                write_text("-", table);
            } else {
                write_text(cc.out, martingale_to_json(ex.mart));
                if (!ce_probe.empty()) write_text(ce_probe, table);
            }
            for (const auto& r : records)
                if (r.kind != RecordKind::report)
                    std::cerr << r.claim << ": " << (r.pass ? "pass" : "fail") << " (margin " << format_number(r.margin) << ")\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
