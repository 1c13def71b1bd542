#pragma once

/**
 * Truncated complex power series about the origin.
 *
 * A TaylorSeries of order N stores the N+1 coefficients c[0..N] of
 * c[0] + c[1] z + ... + c[N] z^N. Binary operations truncate to the smaller
 * of the two operand orders; nothing ever grows the order silently.
 */

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace schwarzian_lab {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultOrder = 128;

/// Value and first three derivatives of a function at a point.
struct Jet {
    Complex value{};
    Complex d1{};
    Complex d2{};
    Complex d3{};
};

class TaylorSeries {
public:
    /// The zero series of the given order.
    explicit TaylorSeries(std::size_t order = kDefaultOrder);
    explicit TaylorSeries(std::vector<Complex> coeffs);
    TaylorSeries(std::initializer_list<Complex> coeffs, std::size_t order);

    static TaylorSeries constant(Complex c, std::size_t order = kDefaultOrder);
    /// The series of z (coefficients 0, 1, 0, ...).
    static TaylorSeries identity(std::size_t order = kDefaultOrder);
    /// 1/(1 - z), all coefficients one.
    static TaylorSeries geometric(std::size_t order = kDefaultOrder);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    Complex operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Complex{}; }
    Complex& operator[](std::size_t n) { return coeffs_.at(n); }

    /// Drops (or zero-pads) coefficients so that order() == n.
    TaylorSeries truncated(std::size_t n) const;

    /// Multiplies by z^k, keeping the order.
    TaylorSeries shifted_up(std::size_t k) const;

    TaylorSeries& operator+=(const TaylorSeries& o);
    TaylorSeries& operator-=(const TaylorSeries& o);
    TaylorSeries& operator*=(Complex s);

    friend TaylorSeries operator+(TaylorSeries a, const TaylorSeries& b) { return a += b; }
    friend TaylorSeries operator-(TaylorSeries a, const TaylorSeries& b) { return a -= b; }
    friend TaylorSeries operator*(TaylorSeries a, Complex s) { return a *= s; }
    friend TaylorSeries operator*(Complex s, TaylorSeries a) { return a *= s; }
    friend TaylorSeries operator-(TaylorSeries a) { return a *= Complex{-1.0}; }

    friend bool operator==(const TaylorSeries&, const TaylorSeries&) = default;

    /// Horner evaluation of the truncated polynomial.
    Complex eval(Complex z) const;
    /// Value and first three derivatives of the truncated polynomial.
    Jet jet(Complex z) const;

    /// Largest coefficient-wise modulus difference over the common order.
    friend double max_abs_diff(const TaylorSeries& a, const TaylorSeries& b);

private:
    std::vector<Complex> coeffs_;
};

TaylorSeries series_mul(const TaylorSeries& a, const TaylorSeries& b);

/// Quotient a/b. Throws ZeroConstantTerm when b[0] == 0.
TaylorSeries series_div(const TaylorSeries& a, const TaylorSeries& b);

/// outer(inner(z)) via Horner accumulation. Throws NonvanishingInner when inner[0] != 0.
TaylorSeries series_compose(const TaylorSeries& outer, const TaylorSeries& inner);

/// Term-wise derivative; order drops by one (an order-0 series stays order 0).
TaylorSeries series_derivative(const TaylorSeries& a);

/// Antiderivative vanishing at 0; order rises by one. Truncate afterwards to keep a budget.
TaylorSeries series_integrate(const TaylorSeries& a);

/// exp(a) through E' = a' E, E(0) = exp(a[0]).
TaylorSeries series_exp(const TaylorSeries& a);

inline TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b) { return series_mul(a, b); }
inline TaylorSeries operator/(const TaylorSeries& a, const TaylorSeries& b) { return series_div(a, b); }

}  // namespace schwarzian_lab
