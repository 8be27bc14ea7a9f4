#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vilenkin/hardy.hpp"
#include "vilenkin/means.hpp"
#include "vilenkin/record.hpp"

namespace vilenkin {

struct SuiteConfig {
    /// Largest natural index n tested (kernels, means, Lebesgue constants).
    Nat n_max = 64;
    /// Residual threshold for identities.
    double tol = 1e-12;
    /// Allowed negative margin for inequalities.
    double margin_tol = 1e-10;
    std::uint64_t seed = 1;
    /// Random test functions per randomized claim.
    int samples = 20;
};

/// Suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

std::vector<VerificationRecord> run_identity_suite(const GroupSpec& g, const SuiteConfig& cfg);
std::vector<VerificationRecord> run_inequality_suite(const GroupSpec& g, const SuiteConfig& cfg);
std::vector<VerificationRecord> run_lemma_suite(const GroupSpec& g, const SuiteConfig& cfg);
std::vector<VerificationRecord> run_structure_suite(const GroupSpec& g, const SuiteConfig& cfg);
std::vector<VerificationRecord> run_strong_suite(const GroupSpec& g, const SuiteConfig& cfg);
/// Runs one suite (or "all") and returns the records sorted by claim, then params.
std::vector<VerificationRecord> run_suite(std::string_view name, const GroupSpec& g, const SuiteConfig& cfg);

void sort_records(std::vector<VerificationRecord>& records);
/// True iff every check and trend record passes; reports are ignored.
bool all_pass(std::span<const VerificationRecord> records);

/// Anchors every record claim is filed under.
const std::vector<std::string>& anchor_catalogue();
/// Longest catalogue anchor that prefixes the claim (up to a '.'), or empty.
std::string anchor_of(std::string_view claim);

/// Smallest rank N with M_N >= n; requires M_levels >= n.
int working_rank(const GroupSpec& g, Nat n);

/// Seeded random function: mt19937_64 words mapped to (2u - 1), u = (w >> 11) / 2^53,
/// real part then imaginary part at each grid index in order.
GridFunction random_function(const GroupSpec& g, int N, std::uint64_t seed);

enum class NormKind { lp, hardy };

struct StrongSumSpec {
    MeanSpec mean = MeanSpec::partial_sums();
    double p = 1.0;
    /// Per-term weight w(k); empty means 1.
    std::function<double(Nat)> weight;
    /// Factor applied to the cumulative sum at n; empty means 1.
    std::function<double(Nat)> normalizer;
    NormKind norm = NormKind::lp;
};

struct StrongSumRow {
    Nat n = 0;
    double term = 0.0;       // w(n) ||mean_n f||^p
    double sum = 0.0;        // sum_{k <= n} of the terms
    double normalized = 0.0; // normalizer(n) * sum
    double ratio = 0.0;      // normalized / ||f||_{H_p}^p
};

/// Cumulative sums of w(k) ||mean_k f||^p for k = 1..n_max; rows at the
/// checkpoints, or at every n when no checkpoints are given.
std::vector<StrongSumRow> strong_sum(const StepMartingale& mart, const StrongSumSpec& spec, Nat n_max,
                                     std::span<const Nat> checkpoints = {});

struct ProbeRow {
    Nat index = 0;
    double value = 0.0;  // ||mean_n f||_{weak-L_p}
    double scaled = 0.0; // value / weight(n)
    std::optional<double> bound;
    double margin = 0.0; // scaled - bound
};

/// Weak-L_p norms of mean_n f at the checkpoints, with an optional lower bound.
std::vector<ProbeRow> divergence_probe(const StepMartingale& mart, const MeanSpec& mean, double p,
                                       std::span<const Nat> checkpoints,
                                       const std::function<double(Nat)>& weight = {},
                                       const std::function<double(Nat)>& bound = {});

struct TProbe {
    Counterexample example;
    std::vector<ProbeRow> rows;
    /// Per-index lower checks, then the trend of the bounds.
    std::vector<VerificationRecord> records;
};

/// T_{M_{alpha_k}+2} f with q = 1 on the hp-blocks martingale, against M^{1/p-2}/(16 alpha_k).
TProbe t_mean_probe(const GroupSpec& g, const CounterexampleParams& params, double tol);

/// Probe checkpoints for a counterexample: 2 M_alpha for the strong-sum kinds,
/// M_alpha + 2 for hp-blocks.
std::vector<Nat> probe_checkpoints(const GroupSpec& g, CounterexampleKind kind, std::span<const int> alpha);

/// Strictly increasing (or strictly decreasing) finite sequence, as a trend record.
VerificationRecord trend_record(std::string suite, std::string claim, Params params, std::span<const double> values,
                                std::string note = {}, bool increasing = true);

} // namespace vilenkin
