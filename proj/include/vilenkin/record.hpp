#pragma once

#include <string>
#include <utility>
#include <vector>

namespace vilenkin {

/// check: pass/fail against a stated bound; report: measured value only (the
/// claim has an unspecified constant); trend: finite monotonicity check.
enum class RecordKind { check, report, trend };

std::string_view to_string(RecordKind kind) noexcept;

using Params = std::vector<std::pair<std::string, std::string>>;

struct VerificationRecord {
    std::string suite;
    std::string claim;
    Params params;
    double value = 0.0;
    double bound = 0.0;
    /// bound - value, minimised over instances; >= -tolerance passes.
    double margin = 0.0;
    bool pass = true;
    double tolerance = 0.0;
    RecordKind kind = RecordKind::check;
    std::string note;
};

/// Record for "value <= bound".
VerificationRecord upper_check(std::string suite, std::string claim, Params params, double value, double bound,
                               double tol);
/// Record for "value >= bound".
VerificationRecord lower_check(std::string suite, std::string claim, Params params, double value, double bound,
                               double tol);
/// Residual record: value is a residual that must not exceed tol.
VerificationRecord residual_check(std::string suite, std::string claim, Params params, double residual, double tol);
VerificationRecord report(std::string suite, std::string claim, Params params, double value, std::string note = {});

/// Folds a new instance into an accumulated record, keeping the worst margin.
void merge_worst(VerificationRecord& acc, const VerificationRecord& next);

std::string format_number(double v);

} // namespace vilenkin
