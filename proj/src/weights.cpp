#include "vilenkin/weights.hpp"

#include <cmath>
#include <sstream>

namespace vilenkin {

std::string_view to_string(Monotonicity m) noexcept {
    switch (m) {
    case Monotonicity::nonincreasing: return "nonincreasing";
    case Monotonicity::nondecreasing: return "nondecreasing";
    case Monotonicity::general: return "general";
    }
    return "general";
}

WeightSequence::WeightSequence(std::vector<double> explicit_weights, std::string name, Monotonicity declared)
    : name_(std::move(name)), declared_(declared), cache_(std::make_shared<Cache>()) {
    for (double w : explicit_weights) require(w >= 0.0 && std::isfinite(w), ErrorKind::degenerate_weights, "weights must be finite and >= 0");
    auto list = std::make_shared<std::vector<double>>(std::move(explicit_weights));
    generator_ = [list](Nat k) { return k < list->size() ? (*list)[k] : 0.0; };
}

WeightSequence::WeightSequence(std::function<double(Nat)> generator, std::string name, Monotonicity declared)
    : generator_(std::move(generator)), name_(std::move(name)), declared_(declared),
      cache_(std::make_shared<Cache>()) {}

WeightSequence WeightSequence::constant(double c) {
    require(c > 0.0, ErrorKind::degenerate_weights, "constant weight must be positive");
    std::ostringstream os;
    os.precision(17);
    os << "constant(" << c << ")";
    // Constant weights are both nonincreasing and nondecreasing; report the former.
    return WeightSequence([c](Nat) { return c; }, os.str(), Monotonicity::nonincreasing);
}

WeightSequence WeightSequence::power(double alpha) {
    require(alpha > 0.0, ErrorKind::domain, "power weights need alpha > 0");
    std::ostringstream os;
    os.precision(17);
    os << "power(" << alpha << ")";
    const auto mono = alpha <= 1.0 ? Monotonicity::nonincreasing : Monotonicity::nondecreasing;
    return WeightSequence([alpha](Nat k) { return k == 0 ? 1.0 : std::pow(static_cast<double>(k), alpha - 1.0); },
                          os.str(), mono);
}

WeightSequence WeightSequence::cesaro(double alpha) {
    require(alpha > 0.0, ErrorKind::domain, "inverse Cesaro weights need alpha > 0");
    std::ostringstream os;
    os.precision(17);
    os << "cesaro(" << alpha << ")";
    const auto mono = alpha <= 1.0 ? Monotonicity::nonincreasing : Monotonicity::nondecreasing;
    // A_k^{alpha-1} by the running product, recomputed lazily from the last cached value.
    auto state = std::make_shared<std::pair<std::mutex, std::vector<double>>>();
    state->second.push_back(1.0);
    return WeightSequence(
        [alpha, state](Nat k) {
            std::lock_guard lock(state->first);
            auto& t = state->second;
            while (t.size() <= k) {
                const double n = static_cast<double>(t.size());
                t.push_back(t.back() * (alpha - 1.0 + n) / n);
            }
            return t[k];
        },
        os.str(), mono);
}

WeightSequence WeightSequence::iterated_log(double alpha, int beta) {
    require(alpha > 0.0 && beta >= 1, ErrorKind::domain, "iterated log weights need alpha > 0, beta >= 1");
    std::ostringstream os;
    os.precision(17);
    os << "iterated_log(" << alpha << "," << beta << ")";
    return WeightSequence(
        [alpha, beta](Nat k) {
            if (k == 0) return 0.0;
            double v = alpha * std::log(static_cast<double>(k));
            for (int b = 1; b < beta && v > 0.0; ++b) v = std::log(v);
            return v > 0.0 ? v : 0.0;
        },
        os.str(), Monotonicity::nondecreasing);
}

WeightSequence WeightSequence::harmonic() {
    return WeightSequence([](Nat k) { return 1.0 / static_cast<double>(k + 1); }, "harmonic",
                          Monotonicity::nonincreasing);
}

void WeightSequence::extend(Nat n) const {
    auto& c = *cache_;
    while (c.q.size() < n) {
        const double w = generator_(static_cast<Nat>(c.q.size()));
        if (!(w >= 0.0 && std::isfinite(w)))
            fail(ErrorKind::degenerate_weights, name_ + ": q_" + std::to_string(c.q.size()) + " is negative or not finite");
        c.q.push_back(w);
        // Kahan summation of the running total.
        const double y = w - c.carry;
        const double t = c.Q.back() + y;
        c.carry = (t - c.Q.back()) - y;
        c.Q.push_back(t);
    }
}

double WeightSequence::q(Nat k) const {
    std::lock_guard lock(cache_->mu);
    extend(k + 1);
    return cache_->q[k];
}

double WeightSequence::Q(Nat n) const {
    std::lock_guard lock(cache_->mu);
    extend(n);
    return cache_->Q[n];
}

bool WeightSequence::verify_monotonicity(Nat n, double tol) const {
    if (declared_ == Monotonicity::general || n < 2) return true;
    for (Nat k = 0; k + 1 < n; ++k) {
        const double a = q(k);
        const double b = q(k + 1);
        if (declared_ == Monotonicity::nonincreasing && b > a + tol) return false;
        if (declared_ == Monotonicity::nondecreasing && b < a - tol) return false;
    }
    return true;
}

std::string WeightSequence::key() const { return name_; }

CesaroCoeffs::CesaroCoeffs(double alpha, Nat n_max) : alpha_(alpha) {
    const double r = std::round(alpha);
    require(!(alpha < 0.0 && r == alpha), ErrorKind::domain, "A_n^alpha is undefined for negative integer alpha");
    table_.reserve(n_max + 1);
    table_.push_back(1.0);
    for (Nat n = 1; n <= n_max; ++n)
        table_.push_back(table_.back() * (alpha + static_cast<double>(n)) / static_cast<double>(n));
}

double CesaroCoeffs::operator()(Nat n) const {
    require(n < table_.size(), ErrorKind::range, "A_n^alpha requested beyond the table");
    return table_[n];
}

double log_normalizer(Nat n) {
    double s = 0.0;
    for (Nat k = n; k-- > 1;) s += 1.0 / static_cast<double>(k);
    return s;
}

} // namespace vilenkin
