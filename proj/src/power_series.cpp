#include "schwarzian_lab/power_series.hpp"

#include <algorithm>
#include <cmath>

#include "schwarzian_lab/errors.hpp"

namespace schwarzian_lab {

TaylorSeries::TaylorSeries(std::size_t order) : coeffs_(order + 1) {}

TaylorSeries::TaylorSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Complex{});
}

TaylorSeries::TaylorSeries(std::initializer_list<Complex> coeffs, std::size_t order) : coeffs_(order + 1) {
    std::size_t n = 0;
    for (const auto& c : coeffs) {
        if (n > order) break;
        coeffs_[n++] = c;
    }
}

TaylorSeries TaylorSeries::constant(Complex c, std::size_t order) {
    TaylorSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TaylorSeries TaylorSeries::identity(std::size_t order) {
    TaylorSeries s(order);
    if (order >= 1) s.coeffs_[1] = 1.0;
    return s;
}

TaylorSeries TaylorSeries::geometric(std::size_t order) {
    return TaylorSeries(std::vector<Complex>(order + 1, Complex{1.0}));
}

TaylorSeries TaylorSeries::truncated(std::size_t n) const {
    std::vector<Complex> c(n + 1);
    std::copy_n(coeffs_.begin(), std::min(c.size(), coeffs_.size()), c.begin());
    return TaylorSeries(std::move(c));
}

TaylorSeries TaylorSeries::shifted_up(std::size_t k) const {
    TaylorSeries s(order());
    for (std::size_t n = k; n <= order(); ++n) s.coeffs_[n] = coeffs_[n - k];
    return s;
}

TaylorSeries& TaylorSeries::operator+=(const TaylorSeries& o) {
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
}

TaylorSeries& TaylorSeries::operator-=(const TaylorSeries& o) {
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
    return *this;
}

TaylorSeries& TaylorSeries::operator*=(Complex s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Complex TaylorSeries::eval(Complex z) const {
    Complex v{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * z + *it;
    return v;
}

Jet TaylorSeries::jet(Complex z) const {
    // Horner with three derivative accumulators.
    Complex v = coeffs_.back(), d1{}, d2{}, d3{};
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
        d3 = d3 * z + d2;
        d2 = d2 * z + d1;
        d1 = d1 * z + v;
        v = v * z + coeffs_[k];
    }
    return {v, d1, 2.0 * d2, 6.0 * d3};
}

double max_abs_diff(const TaylorSeries& a, const TaylorSeries& b) {
    double m = 0.0;
    const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t k = 0; k < n; ++k) m = std::max(m, std::abs(a.coeffs_[k] - b.coeffs_[k]));
    return m;
}

TaylorSeries series_mul(const TaylorSeries& a, const TaylorSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    TaylorSeries c(order);
    for (std::size_t n = 0; n <= order; ++n) {
        Complex acc{};
        for (std::size_t k = 0; k <= n; ++k) acc += a[k] * b[n - k];
        c[n] = acc;
    }
    return c;
}

TaylorSeries series_div(const TaylorSeries& a, const TaylorSeries& b) {
    if (std::abs(b[0]) == 0.0) throw ZeroConstantTerm("series_div: divisor has zero constant term");
    const std::size_t order = std::min(a.order(), b.order());
    TaylorSeries c(order);
    const Complex inv = 1.0 / b[0];
    for (std::size_t n = 0; n <= order; ++n) {
        Complex acc = a[n];
        for (std::size_t k = 1; k <= n; ++k) acc -= b[k] * c[n - k];
        c[n] = acc * inv;
    }
    return c;
}

TaylorSeries series_compose(const TaylorSeries& outer, const TaylorSeries& inner) {
    if (inner[0] != Complex{}) throw NonvanishingInner("series_compose: inner series must vanish at 0");
    const std::size_t order = std::min(outer.order(), inner.order());
    TaylorSeries acc = TaylorSeries::constant(outer[order], order);
    for (std::size_t k = order; k-- > 0;) {
        acc = series_mul(acc, inner);
        acc[0] += outer[k];
    }
    return acc;
}

TaylorSeries series_derivative(const TaylorSeries& a) {
    if (a.order() == 0) return TaylorSeries(0);
    TaylorSeries d(a.order() - 1);
    for (std::size_t n = 1; n <= a.order(); ++n) d[n - 1] = static_cast<double>(n) * a[n];
    return d;
}

TaylorSeries series_integrate(const TaylorSeries& a) {
    TaylorSeries s(a.order() + 1);
    for (std::size_t n = 0; n <= a.order(); ++n) s[n + 1] = a[n] / static_cast<double>(n + 1);
    return s;
}

TaylorSeries series_exp(const TaylorSeries& a) {
    TaylorSeries e(a.order());
    e[0] = std::exp(a[0]);
    for (std::size_t n = 1; n <= a.order(); ++n) {
        Complex acc{};
        for (std::size_t k = 1; k <= n; ++k) acc += static_cast<double>(k) * a[k] * e[n - k];
        e[n] = acc / static_cast<double>(n);
    }
    return e;
}

}  // namespace schwarzian_lab
