#include "vilenkin/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vilenkin/characters.hpp"

namespace vilenkin {

GridFunction::GridFunction(GroupSpec group, int resolution, std::vector<Complex> values)
    : group_(std::move(group)), resolution_(resolution), values_(std::move(values)) {
    require(resolution_ >= 0 && resolution_ <= group_.levels(), ErrorKind::shape,
            "resolution " + std::to_string(resolution_) + " outside the group");
    require(values_.size() == group_.block(resolution_), ErrorKind::shape,
            "expected " + std::to_string(group_.block(resolution_)) + " values, got " +
                std::to_string(values_.size()));
}

GridFunction GridFunction::zeros(const GroupSpec& group, int resolution) {
    return constant(group, resolution, Complex{});
}

GridFunction GridFunction::constant(const GroupSpec& group, int resolution, Complex c) {
    require(resolution >= 0 && resolution <= group.levels(), ErrorKind::shape, "resolution outside the group");
    return GridFunction(group, resolution, std::vector<Complex>(group.block(resolution), c));
}

GridFunction GridFunction::from_index(const GroupSpec& group, int resolution,
                                      const std::function<Complex(Nat)>& fn) {
    require(resolution >= 0 && resolution <= group.levels(), ErrorKind::shape, "resolution outside the group");
    std::vector<Complex> v(group.block(resolution));
    for (Nat i = 0; i < v.size(); ++i) v[i] = fn(i);
    return GridFunction(group, resolution, std::move(v));
}

Complex GridFunction::integral() const {
    Complex s{};
    for (const auto& v : values_) s += v;
    return s / static_cast<double>(values_.size());
}

GridFunction GridFunction::refine(int resolution) const {
    require(resolution >= resolution_, ErrorKind::shape, "refine cannot lower the resolution");
    require(resolution <= group_.levels(), ErrorKind::shape, "resolution outside the group");
    if (resolution == resolution_) return *this;
    const Nat coarse = size();
    std::vector<Complex> v(group_.block(resolution));
    for (Nat i = 0; i < v.size(); ++i) v[i] = values_[i % coarse];
    return GridFunction(group_, resolution, std::move(v));
}

GridFunction GridFunction::shifted(Nat h) const {
    require(h < size(), ErrorKind::range, "shift outside the grid");
    std::vector<Complex> v(values_.size());
    for (Nat i = 0; i < v.size(); ++i) v[i] = values_[index_sub(group_, resolution_, i, h)];
    return GridFunction(group_, resolution_, std::move(v));
}

GridFunction GridFunction::abs() const {
    auto out = *this;
    for (auto& v : out.values_) v = std::abs(v);
    return out;
}

GridFunction GridFunction::conj() const {
    auto out = *this;
    for (auto& v : out.values_) v = std::conj(v);
    return out;
}

void GridFunction::check_same(const GridFunction& other) const {
    require(resolution_ == other.resolution_, ErrorKind::shape, "grid functions have different resolutions");
    require(group_.compatible(other.group_, resolution_), ErrorKind::shape, "grid functions live on different groups");
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
    check_same(other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
    check_same(other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

GridFunction& GridFunction::operator*=(Complex c) {
    for (auto& v : values_) v *= c;
    return *this;
}

GridFunction& GridFunction::operator*=(const GridFunction& other) {
    check_same(other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= other.values_[i];
    return *this;
}

GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
GridFunction operator*(GridFunction a, Complex c) { return a *= c; }
GridFunction operator*(Complex c, GridFunction a) { return a *= c; }
GridFunction operator*(GridFunction a, const GridFunction& b) { return a *= b; }

void align(GridFunction& a, GridFunction& b) {
    const int n = std::max(a.resolution(), b.resolution());
    a = a.refine(n);
    b = b.refine(n);
}

double max_abs_diff(const GridFunction& a, const GridFunction& b) {
    GridFunction x = a;
    GridFunction y = b;
    align(x, y);
    double d = 0.0;
    for (Nat i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
    return d;
}

Complex fourier_coeff(const GridFunction& f, Nat n) {
    const Nat size = f.size();
    if (n >= size) return {0.0, 0.0};
    Complex s{};
    for (Nat x = 0; x < size; ++x) s += f[x] * std::conj(character_at(f.group(), f.resolution(), n, x));
    return s / static_cast<double>(size);
}

namespace {

// In-place stage-by-stage transform. sign = -1 applies conj(psi), +1 applies psi.
void mixed_radix_pass(const GroupSpec& g, int resolution, std::vector<Complex>& a, int sign) {
    const Nat size = a.size();
    std::vector<Complex> twiddle;
    std::vector<Complex> buf;
    for (int k = 0; k < resolution; ++k) {
        const Nat m = static_cast<Nat>(g.radix(k));
        const Nat stride = g.block(k);
        const Nat span = stride * m;
        if (m == 2) {
            for (Nat base = 0; base < size; base += span)
                for (Nat lo = 0; lo < stride; ++lo) {
                    Complex& u = a[base + lo];
                    Complex& v = a[base + lo + stride];
                    const Complex t = u;
                    u = t + v;
                    v = t - v;
                }
            continue;
        }
        twiddle.resize(m * m);
        for (Nat n = 0; n < m; ++n)
            for (Nat x = 0; x < m; ++x) {
                const Complex w = g.root(k, n * x);
                twiddle[n * m + x] = sign < 0 ? std::conj(w) : w;
            }
        buf.resize(m);
        for (Nat base = 0; base < size; base += span)
            for (Nat lo = 0; lo < stride; ++lo) {
                const Nat first = base + lo;
                for (Nat n = 0; n < m; ++n) {
                    Complex s{};
                    for (Nat x = 0; x < m; ++x) s += twiddle[n * m + x] * a[first + x * stride];
                    buf[n] = s;
                }
                for (Nat n = 0; n < m; ++n) a[first + n * stride] = buf[n];
            }
    }
}

} // namespace

Spectrum transform_forward(const GridFunction& f) {
    std::vector<Complex> a(f.values().begin(), f.values().end());
    mixed_radix_pass(f.group(), f.resolution(), a, -1);
    const double scale = 1.0 / static_cast<double>(a.size());
    for (auto& v : a) v *= scale;
    return {f.group(), f.resolution(), std::move(a)};
}

GridFunction transform_inverse(const Spectrum& s) {
    require(s.resolution >= 0 && s.resolution <= s.group.levels(), ErrorKind::shape, "resolution outside the group");
    require(s.coeffs.size() == s.group.block(s.resolution), ErrorKind::shape, "spectrum length differs from M_N");
    std::vector<Complex> a = s.coeffs;
    mixed_radix_pass(s.group, s.resolution, a, +1);
    return GridFunction(s.group, s.resolution, std::move(a));
}

GridFunction partial_sum(const GridFunction& f, Nat n) {
    require(n <= f.size(), ErrorKind::range,
            "S_" + std::to_string(n) + " beyond grid rank M_N = " + std::to_string(f.size()));
    if (n == f.size()) return f;
    auto s = transform_forward(f);
    std::fill(s.coeffs.begin() + static_cast<std::ptrdiff_t>(n), s.coeffs.end(), Complex{});
    return transform_inverse(s);
}

GridFunction apply_multiplier(const GridFunction& f, std::span<const Complex> multiplier) {
    require(multiplier.size() == f.size(), ErrorKind::shape, "multiplier length differs from M_N");
    auto s = transform_forward(f);
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) s.coeffs[k] *= multiplier[k];
    return transform_inverse(s);
}

GridFunction apply_multiplier(const GridFunction& f, std::span<const double> multiplier) {
    require(multiplier.size() == f.size(), ErrorKind::shape, "multiplier length differs from M_N");
    auto s = transform_forward(f);
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) s.coeffs[k] *= multiplier[k];
    return transform_inverse(s);
}

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
    require(f.resolution() == g.resolution(), ErrorKind::shape, "convolution needs equal resolutions");
    require(f.group().compatible(g.group(), f.resolution()), ErrorKind::shape, "convolution needs the same group");
    auto a = transform_forward(f);
    const auto b = transform_forward(g);
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) a.coeffs[k] *= b.coeffs[k];
    return transform_inverse(a);
}

double lp_norm(const GridFunction& f, double p) {
    require(p > 0.0, ErrorKind::domain, "L_p norm needs p > 0");
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& v : f.values()) m = std::max(m, std::abs(v));
        return m;
    }
    double s = 0.0;
    for (const auto& v : f.values()) s += std::pow(std::abs(v), p);
    return std::pow(s / static_cast<double>(f.size()), 1.0 / p);
}

double weak_lp(const GridFunction& f, double p) {
    require(p > 0.0, ErrorKind::domain, "weak L_p needs p > 0");
    std::vector<double> mag(f.size());
    for (Nat i = 0; i < f.size(); ++i) mag[i] = std::abs(f[i]);
    std::sort(mag.begin(), mag.end(), std::greater<>());
    if (std::isinf(p)) return mag.empty() ? 0.0 : mag.front();
    // Just below the value v the level set {|f| > t} is {|f| >= v}.
    const double total = static_cast<double>(mag.size());
    double best = 0.0;
    for (std::size_t i = 0; i < mag.size(); ++i) {
        if (i + 1 < mag.size() && mag[i + 1] == mag[i]) continue;
        const double measure = static_cast<double>(i + 1) / total;
        best = std::max(best, mag[i] * std::pow(measure, 1.0 / p));
    }
    return best;
}

GridFunction coarsen(const GridFunction& f, int n) {
    require(n >= 0 && n <= f.resolution(), ErrorKind::range,
            "E_" + std::to_string(n) + " needs n <= resolution " + std::to_string(f.resolution()));
    const Nat block = f.group().block(n);
    const Nat reps = f.size() / block;
    std::vector<Complex> v(block);
    for (Nat i = 0; i < f.size(); ++i) v[i % block] += f[i];
    for (auto& x : v) x /= static_cast<double>(reps);
    return GridFunction(f.group(), n, std::move(v));
}

GridFunction conditional_expectation(const GridFunction& f, int n) {
    return coarsen(f, n).refine(f.resolution());
}

} // namespace vilenkin
