#include "vilenkin/record.hpp"

#include <cmath>
#include <cstdio>

namespace vilenkin {

std::string_view to_string(RecordKind kind) noexcept {
    switch (kind) {
    case RecordKind::check: return "check";
    case RecordKind::report: return "report";
    case RecordKind::trend: return "trend";
    }
    return "check";
}

VerificationRecord upper_check(std::string suite, std::string claim, Params params, double value, double bound,
                               double tol) {
    VerificationRecord r;
    r.suite = std::move(suite);
    r.claim = std::move(claim);
    r.params = std::move(params);
    r.value = value;
    r.bound = bound;
    r.margin = bound - value;
    r.tolerance = tol;
    r.pass = r.margin >= -tol;
    return r;
}

VerificationRecord lower_check(std::string suite, std::string claim, Params params, double value, double bound,
                               double tol) {
    auto r = upper_check(std::move(suite), std::move(claim), std::move(params), value, bound, tol);
    r.margin = value - bound;
    r.pass = r.margin >= -tol;
    return r;
}

VerificationRecord residual_check(std::string suite, std::string claim, Params params, double residual, double tol) {
    auto r = upper_check(std::move(suite), std::move(claim), std::move(params), residual, tol, 0.0);
    // The tolerance is the bound itself; NaN residuals fail.
    r.tolerance = tol;
    r.margin = tol - residual;
    r.pass = std::isfinite(residual) && residual <= tol;
    return r;
}

VerificationRecord report(std::string suite, std::string claim, Params params, double value, std::string note) {
    VerificationRecord r;
    r.suite = std::move(suite);
    r.claim = std::move(claim);
    r.params = std::move(params);
    r.value = value;
    r.bound = value;
    r.kind = RecordKind::report;
    r.note = std::move(note);
    return r;
}

void merge_worst(VerificationRecord& acc, const VerificationRecord& next) {
    if (!next.pass && acc.pass) {
        acc = next;
        return;
    }
    if (next.pass == acc.pass && next.margin < acc.margin) acc = next;
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace vilenkin
