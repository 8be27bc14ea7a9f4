#include "vilenkin/group.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <numeric>
#include <string>

namespace vilenkin {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::invalid_group: return "invalid-group";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::shape: return "shape";
    case ErrorKind::range: return "range";
    case ErrorKind::domain: return "domain";
    case ErrorKind::degenerate_weights: return "degenerate-weights";
    case ErrorKind::invalid_params: return "invalid-params";
    case ErrorKind::atom_mean: return "atom-mean";
    case ErrorKind::atom_bound: return "atom-bound";
    case ErrorKind::atom_support: return "atom-support";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::io: return "io";
    }
    return "unknown";
}

namespace {

constexpr Nat kMaxPhaseDenominator = Nat{1} << 20;

Complex unit_root(Nat num, Nat den) {
    num %= den;
    // Quarter turns are returned exactly so Walsh and m = 4 values stay integral.
    if ((4 * num) % den == 0) {
        switch ((4 * num) / den) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
        }
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

} // namespace

GroupSpec::GroupSpec(std::vector<int> radices) : radices_(std::move(radices)) {
    require(!radices_.empty(), ErrorKind::invalid_group, "at least one level is required");
    blocks_.reserve(radices_.size() + 1);
    blocks_.push_back(1);
    for (std::size_t k = 0; k < radices_.size(); ++k) {
        const int m = radices_[k];
        require(m >= 2, ErrorKind::invalid_group, "radix m_" + std::to_string(k) + " = " + std::to_string(m) + " < 2");
        const Nat prev = blocks_.back();
        require(prev <= std::numeric_limits<Nat>::max() / static_cast<Nat>(m), ErrorKind::overflow,
                "M_" + std::to_string(k + 1) + " exceeds the 64-bit range");
        blocks_.push_back(prev * static_cast<Nat>(m));
        lambda_ = std::max(lambda_, m);
        phase_den_ = std::lcm(phase_den_, static_cast<Nat>(m));
        require(phase_den_ <= kMaxPhaseDenominator, ErrorKind::invalid_group,
                "least common multiple of the radices is too large");
    }
    auto table = std::make_shared<std::vector<Complex>>(phase_den_);
    for (Nat j = 0; j < phase_den_; ++j) (*table)[j] = unit_root(j, phase_den_);
    phase_table_ = std::move(table);
}

int GroupSpec::radix(int k) const {
    if (k < 0 || k >= levels()) fail(ErrorKind::range, "level " + std::to_string(k) + " outside the group");
    return radices_[static_cast<std::size_t>(k)];
}

Nat GroupSpec::block(int k) const {
    if (k < 0 || k > levels()) fail(ErrorKind::range, "M_" + std::to_string(k) + " outside the group");
    return blocks_[static_cast<std::size_t>(k)];
}

Complex GroupSpec::root(int k, Nat e) const {
    const Nat m = static_cast<Nat>(radix(k));
    return phase((e % m) * (phase_den_ / m));
}

bool GroupSpec::compatible(const GroupSpec& other, int resolution) const noexcept {
    if (resolution > levels() || resolution > other.levels()) return false;
    for (int k = 0; k < resolution; ++k)
        if (radices_[static_cast<std::size_t>(k)] != other.radices_[static_cast<std::size_t>(k)]) return false;
    return true;
}

GroupSpec make_group(std::span<const int> radices, int levels) {
    require(!radices.empty(), ErrorKind::invalid_group, "empty radix list");
    require(levels >= 1, ErrorKind::invalid_group, "levels must be >= 1");
    std::vector<int> full(static_cast<std::size_t>(levels));
    for (std::size_t k = 0; k < full.size(); ++k) full[k] = radices[k % radices.size()];
    return GroupSpec(std::move(full));
}

Nat index_of(const GroupSpec& g, const Point& x) {
    require(x.resolution() <= g.levels(), ErrorKind::shape, "point finer than the group");
    Nat index = 0;
    for (int j = 0; j < x.resolution(); ++j) {
        const int d = x.digits[static_cast<std::size_t>(j)];
        require(d >= 0 && d < g.radix(j), ErrorKind::range, "digit out of range");
        index += static_cast<Nat>(d) * g.block(j);
    }
    return index;
}

Point point_at(const GroupSpec& g, int resolution, Nat index) {
    require(resolution >= 0 && resolution <= g.levels(), ErrorKind::shape, "resolution outside the group");
    require(index < g.block(resolution), ErrorKind::range, "grid index out of range");
    Point x;
    x.digits.resize(static_cast<std::size_t>(resolution));
    for (int j = 0; j < resolution; ++j) {
        const Nat m = static_cast<Nat>(g.radix(j));
        x.digits[static_cast<std::size_t>(j)] = static_cast<int>(index % m);
        index /= m;
    }
    return x;
}

namespace {

Point digitwise(const GroupSpec& g, const Point& x, const Point& y, int sign) {
    require(x.resolution() == y.resolution(), ErrorKind::shape, "points have different resolutions");
    require(x.resolution() <= g.levels(), ErrorKind::shape, "point finer than the group");
    Point z;
    z.digits.resize(x.digits.size());
    for (int j = 0; j < x.resolution(); ++j) {
        const int m = g.radix(j);
        const auto u = static_cast<std::size_t>(j);
        z.digits[u] = ((x.digits[u] + sign * y.digits[u]) % m + m) % m;
    }
    return z;
}

Nat digitwise_index(const GroupSpec& g, int resolution, Nat a, Nat b, bool subtract) {
    Nat out = 0;
    for (int j = 0; j < resolution; ++j) {
        const Nat m = static_cast<Nat>(g.radix(j));
        const Nat da = a % m;
        const Nat db = b % m;
        a /= m;
        b /= m;
        const Nat d = subtract ? (da + m - db) % m : (da + db) % m;
        out += d * g.block(j);
    }
    return out;
}

} // namespace

Point group_add(const GroupSpec& g, const Point& x, const Point& y) { return digitwise(g, x, y, +1); }
Point group_sub(const GroupSpec& g, const Point& x, const Point& y) { return digitwise(g, x, y, -1); }

Point group_neg(const GroupSpec& g, const Point& x) {
    Point zero;
    zero.digits.assign(x.digits.size(), 0);
    return group_sub(g, zero, x);
}

Nat index_add(const GroupSpec& g, int resolution, Nat a, Nat b) {
    return digitwise_index(g, resolution, a, b, false);
}

Nat index_sub(const GroupSpec& g, int resolution, Nat a, Nat b) {
    return digitwise_index(g, resolution, a, b, true);
}

double point_norm(const GroupSpec& g, const Point& x) {
    double s = 0.0;
    for (int k = 0; k < x.resolution(); ++k)
        s += x.digits[static_cast<std::size_t>(k)] / static_cast<double>(g.block(k + 1));
    return s;
}

double point_distance(const GroupSpec& g, const Point& x, const Point& y) {
    require(x.resolution() == y.resolution(), ErrorKind::shape, "points have different resolutions");
    double s = 0.0;
    for (int k = 0; k < x.resolution(); ++k) {
        const auto u = static_cast<std::size_t>(k);
        s += std::abs(x.digits[u] - y.digits[u]) / static_cast<double>(g.block(k + 1));
    }
    return s;
}

NatDigits digits_of(Nat n, const GroupSpec& g) {
    require(n < g.block(g.levels()), ErrorKind::overflow,
            std::to_string(n) + " does not fit in " + std::to_string(g.levels()) + " levels");
    NatDigits out;
    out.value = n;
    out.digits.assign(static_cast<std::size_t>(g.levels()), 0);
    bool seen = false;
    for (int j = 0; j < g.levels(); ++j) {
        const Nat m = static_cast<Nat>(g.radix(j));
        const int d = static_cast<int>(n % m);
        n /= m;
        out.digits[static_cast<std::size_t>(j)] = d;
        if (d != 0) {
            if (!seen) out.lo = j;
            seen = true;
            out.hi = j;
        }
    }
    return out;
}

Nat from_digits(std::span<const int> digits, const GroupSpec& g) {
    Nat n = 0;
    for (std::size_t j = 0; j < digits.size(); ++j) n += static_cast<Nat>(digits[j]) * g.block(static_cast<int>(j));
    return n;
}

Nat nat_hat_add(Nat n, Nat k, const GroupSpec& g) {
    const auto a = digits_of(n, g);
    const auto b = digits_of(k, g);
    return index_add(g, g.levels(), a.value, b.value);
}

Nat nat_hat_sub(Nat n, Nat k, const GroupSpec& g) {
    const auto a = digits_of(n, g);
    const auto b = digits_of(k, g);
    return index_sub(g, g.levels(), a.value, b.value);
}

int variation_v(const NatDigits& n, VariationConvention convention) {
    if (n.value == 0) return 0;
    auto delta = [&](int j) { return n.digit(j) != 0 ? 1 : 0; };
    const int start = convention == VariationConvention::literal ? 1 : 0;
    int v = delta(0);
    for (int j = start; j <= n.hi; ++j) v += std::abs(delta(j + 1) - delta(j));
    return v;
}

int variation_vstar(const NatDigits& n, const GroupSpec& g) {
    int v = 0;
    for (int j = 0; j <= n.hi && n.value != 0; ++j) {
        const int d = n.digit(j);
        if (d == 0) continue;
        const int m = g.radix(j);
        const int neg = (m - d) % m;
        v += std::abs(neg - 1);
    }
    return v;
}

int walsh_variation(const NatDigits& n, VariationConvention convention) {
    if (n.value == 0) return 0;
    const int start = convention == VariationConvention::literal ? 1 : 0;
    int v = n.digit(0);
    for (int j = start; j <= n.hi; ++j) v += std::abs(n.digit(j + 1) - n.digit(j));
    return v;
}

std::vector<ShellDescriptor> coset_partition(const GroupSpec& g, int resolution) {
    require(resolution >= 0 && resolution <= g.levels(), ErrorKind::range, "resolution outside the group");
    std::vector<ShellDescriptor> out;
    for (int k = 0; k < resolution; ++k)
        for (int l = k + 1; l <= resolution; ++l) out.push_back({k, l});
    return out;
}

int first_nonzero(const Point& x) noexcept {
    for (int j = 0; j < x.resolution(); ++j)
        if (x.digits[static_cast<std::size_t>(j)] != 0) return j;
    return x.resolution();
}

bool shell_contains(const ShellDescriptor& shell, const Point& x) {
    const int n = x.resolution();
    if (shell.k >= shell.l || shell.l > n) return false;
    const int k = first_nonzero(x);
    if (k != shell.k) return false;
    int l = n;
    for (int j = k + 1; j < n; ++j)
        if (x.digits[static_cast<std::size_t>(j)] != 0) {
            l = j;
            break;
        }
    return l == shell.l;
}

std::vector<Nat> shell_indices(const GroupSpec& g, int resolution, const ShellDescriptor& shell) {
    std::vector<Nat> out;
    const Nat size = g.block(resolution);
    for (Nat i = 0; i < size; ++i)
        if (shell_contains(shell, point_at(g, resolution, i))) out.push_back(i);
    return out;
}

std::vector<Nat> annulus_indices(const GroupSpec& g, int resolution, int s) {
    require(s >= 0 && s < resolution, ErrorKind::range, "annulus level outside resolution");
    std::vector<Nat> out;
    const Nat size = g.block(resolution);
    for (Nat i = 0; i < size; ++i)
        if (i % g.block(s) == 0 && i % g.block(s + 1) != 0) out.push_back(i);
    return out;
}

std::vector<Nat> coset_indices(const GroupSpec& g, int resolution, int n, const Point& x) {
    require(n >= 0 && n <= resolution, ErrorKind::range, "coset rank outside resolution");
    require(x.resolution() >= n, ErrorKind::shape, "coset anchor too coarse");
    Nat anchor = 0;
    for (int j = 0; j < n; ++j) anchor += static_cast<Nat>(x.digits[static_cast<std::size_t>(j)]) * g.block(j);
    const Nat step = g.block(n);
    const Nat count = g.block(resolution) / step;
    std::vector<Nat> out;
    out.reserve(count);
    for (Nat c = 0; c < count; ++c) out.push_back(anchor + c * step);
    return out;
}

} // namespace vilenkin
