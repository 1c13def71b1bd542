#include "schwarzian_lab/robertson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "schwarzian_lab/errors.hpp"

namespace schwarzian_lab {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_radius(double r, const char* who) {
    if (!(r >= 0.0 && r < 1.0)) {
        std::ostringstream os;
        os << who << ": radius must lie in [0, 1), got " << r;
        throw DomainError(os.str());
    }
}

}  // namespace

const char* to_string(Regime r) { return r == Regime::Small ? "Small" : "Large"; }

SpiralAlpha::SpiralAlpha(double alpha) : alpha_(alpha) {
    if (!(std::abs(alpha) < std::numbers::pi / 2)) {
        std::ostringstream os;
        os.precision(17);
        os << "alpha must satisfy |alpha| < pi/2, got " << alpha;
        throw DomainError(os.str());
    }
    sin_ = std::sin(alpha);
    cos_ = std::cos(alpha);
    sin_abs_ = std::abs(sin_);
    regime_ = std::abs(alpha) <= std::numbers::pi / 6 ? Regime::Small : Regime::Large;
}

Complex SpiralAlpha::scale() const noexcept { return 2.0 * cos_ * std::polar(1.0, -alpha_); }

RobertsonFunction::RobertsonFunction(SpiralAlpha alpha, SchwarzFunction omega, TaylorSeries f_series,
                                     Provenance provenance)
    : alpha_(alpha), omega_(std::move(omega)), f_series_(std::move(f_series)), provenance_(provenance) {}

Complex RobertsonFunction::pre_schwarzian(Complex z) const { return pre_schwarzian_via_omega(alpha_, omega_, z); }

Complex RobertsonFunction::schwarzian(Complex z) const { return schwarzian_via_omega(alpha_, omega_, z); }

DiskFunction RobertsonFunction::series_function() const {
    return make_series_function(f_series_, "robertson_series(" + omega_.describe() + ")");
}

RobertsonFunction robertson_from_omega(const SpiralAlpha& alpha, const SchwarzFunction& omega, std::size_t order) {
    const TaylorSeries q = omega.quotient_series(order);
    const TaylorSeries one_minus_w = TaylorSeries::constant(1.0, order) - omega.series(order);
    const TaylorSeries pre = series_div(alpha.scale() * q, one_minus_w);
    const TaylorSeries log_fprime = series_integrate(pre).truncated(order);
    const TaylorSeries f = series_integrate(series_exp(log_fprime)).truncated(order);
    return RobertsonFunction(alpha, omega, f, FromOmega{});
}

Complex pre_schwarzian(const DiskFunction& f, Complex z) {
    const Jet j = f.jet(z);
    if (std::abs(j.d1) < kVanishingDerivativeTol) {
        std::ostringstream os;
        os << "pre_schwarzian: f'(z) vanishes at z = " << z;
        throw VanishingDerivative(os.str());
    }
    return j.d2 / j.d1;
}

Complex schwarzian(const DiskFunction& f, Complex z) {
    const Jet j = f.jet(z);
    if (std::abs(j.d1) < kVanishingDerivativeTol) {
        std::ostringstream os;
        os << "schwarzian: f'(z) vanishes at z = " << z;
        throw VanishingDerivative(os.str());
    }
    const Complex p = j.d2 / j.d1;
    return j.d3 / j.d1 - 1.5 * p * p;
}

Complex pre_schwarzian_via_omega(const SpiralAlpha& alpha, const SchwarzFunction& omega, Complex z) {
    const Complex w = omega(z);
    return alpha.scale() * omega.quotient(z) / (1.0 - w);
}

Complex schwarzian_via_omega(const SpiralAlpha& alpha, const SchwarzFunction& omega, Complex z) {
    const Complex w = omega(z);
    const Jet q = omega.quotient_jet(z);
    const Complex rot = kI * std::polar(1.0, -alpha.value()) * alpha.sin();
    const Complex den = (1.0 - w) * (1.0 - w);
    return alpha.scale() * (q.d1 + rot * q.value * q.value) / den;
}

namespace {

template <class PreSchwarzian>
double membership_scan(const SpiralAlpha& alpha, const GridConfig& grid, PreSchwarzian&& pre) {
    grid.validate();
    const Complex rot = std::polar(1.0, alpha.value());
    double m = std::numeric_limits<double>::infinity();
    const auto angles = grid.angles();
    for (double r : grid.radii()) {
        for (double t : angles) {
            const Complex z = std::polar(r, t);
            m = std::min(m, (rot * (1.0 + z * pre(z))).real());
        }
    }
    return m;
}

}  // namespace

double membership_min(const SpiralAlpha& alpha, const DiskFunction& f, const GridConfig& grid) {
    GridConfig g = grid;
    if (f.kind() == FunctionKind::SeriesBacked) g.r_max = std::min(g.r_max, kSeriesRadiusCap);
    return membership_scan(alpha, g, [&](Complex z) { return pre_schwarzian(f, z); });
}

double membership_min(const RobertsonFunction& f, const GridConfig& grid) {
    return membership_scan(f.alpha(), grid, [&](Complex z) { return f.pre_schwarzian(z); });
}

std::optional<double> delta(const SpiralAlpha& alpha) {
    if (alpha.regime() == Regime::Small) return std::nullopt;
    return (1.0 - alpha.sin_abs()) / alpha.sin_abs();
}

double s0(const SpiralAlpha& alpha, double r) {
    require_radius(r, "s0");
    return r * r / (1.0 - (1.0 - r * r) * alpha.sin_abs());
}

double h_poly(const SpiralAlpha& alpha, double t) {
    const double s = alpha.sin_abs();
    return s * t * t - t + 1.0 - s;
}

double g_profile(const SpiralAlpha& alpha, double r, double s) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("g_profile: r must lie in (0, 1)");
    if (!(s >= 0.0 && s <= r)) throw DomainError("g_profile: s must lie in [0, r]");
    const double r2 = r * r;
    return (r2 - s * s * (1.0 - (1.0 - r2) * alpha.sin_abs())) / (r2 * (1.0 - r2) * (1.0 - s) * (1.0 - s));
}

double pointwise_bound(const SpiralAlpha& alpha, double r) {
    require_radius(r, "pointwise_bound");
    const double s = alpha.sin_abs();
    const double c = alpha.cos();
    const auto d = delta(alpha);
    if (d && r >= *d) return 2.0 * c * s / ((1.0 - r) * (1.0 - r));
    const double w = 1.0 - r * r;
    return 2.0 * c * (1.0 - w * s) / (w * w * (1.0 - s));
}

double schwarzian_norm_bound(const SpiralAlpha& alpha) {
    if (alpha.regime() == Regime::Small) return 2.0 * alpha.cos() / (1.0 - alpha.sin_abs());
    return 8.0 * alpha.cos() * alpha.sin_abs();
}

double pre_schwarzian_norm_bound(const SpiralAlpha& alpha) { return 4.0 * alpha.cos(); }

int extremal_p(const SpiralAlpha& alpha) { return alpha.value() >= 0.0 ? -1 : 1; }

bool extremal_admissible(const SpiralAlpha& alpha, double z0) {
    if (!(std::abs(z0) < 1.0)) return false;
    if (alpha.regime() == Regime::Small) return true;
    return std::abs(z0) < *delta(alpha);
}

double extremal_b(const SpiralAlpha& alpha, double z0) {
    if (!extremal_admissible(alpha, z0)) {
        std::ostringstream os;
        os.precision(17);
        os << "extremal: (alpha=" << alpha.value() << ", z0=" << z0 << ") violates the admissibility condition";
        if (auto d = delta(alpha)) os << " |z0| < delta = " << *d;
        else os << " |z0| < 1";
        throw ConditionViolation(os.str());
    }
    const double p = extremal_p(alpha);
    const double s = alpha.sin();
    const double z2 = z0 * z0;
    // p = -1: (1 - s) + z0^2 (1 + s) > 0.  p = +1: -(1 - z0^2)(1 - |s|) < 0.
    const double den = -p + z2 - s + z2 * s;
    if (den == 0.0) throw ConditionViolation("extremal_b: vanishing denominator");
    const double b = z0 * (1.0 - p - s + z2 * s) / den;
    if (!(std::abs(b) < 1.0)) throw ConditionViolation("extremal_b: resulting zero lies outside the disk");
    return b;
}

RobertsonFunction extremal_fz0p(const SpiralAlpha& alpha, double z0, std::size_t order) {
    const double b = extremal_b(alpha, z0);
    const int p = extremal_p(alpha);
    RobertsonFunction f = robertson_from_omega(alpha, make_blaschke2(p, b), order);
    return RobertsonFunction(f.alpha(), f.omega(), f.f_series(), ExtremalFz0p{z0, p, b});
}

RobertsonFunction extremal_attaining(const SpiralAlpha& alpha, double z0, std::size_t order) {
    extremal_b(alpha, z0);  // admissibility gate
    const double v = alpha.value();
    const Complex lambda = v > 0.0 ? kI * std::polar(1.0, -v) : v < 0.0 ? -kI * std::polar(1.0, -v) : Complex(-1.0);
    // q(z0) = s0(|z0|)/z0, written without the division
    const double q0 = z0 / (1.0 - (1.0 - z0 * z0) * alpha.sin_abs());
    // q = (lambda M + q0)/(1 + q0 lambda M), M(z) = (z - z0)/(1 - z0 z), rewritten as u (z - a)/(1 - conj(a) z)
    const Complex a = (lambda * z0 - q0) / (lambda - q0 * z0);
    const Complex u = (lambda - q0 * z0) / (1.0 - q0 * lambda * z0);
    RobertsonFunction f = robertson_from_omega(alpha, make_blaschke_fix0(std::arg(u), {a}), order);
    return RobertsonFunction(f.alpha(), f.omega(), f.f_series(), ExtremalAttaining{z0, lambda});
}

double extremal_value(const SpiralAlpha& alpha, double z0) {
    extremal_b(alpha, z0);  // admissibility gate
    const double s = alpha.sin_abs();
    const double w = 1.0 - z0 * z0;
    return 2.0 * alpha.cos() * (1.0 - w * s) / (w * w * (1.0 - s));
}

RobertsonFunction extremal_f0(const SpiralAlpha& alpha, std::size_t order) {
    RobertsonFunction f = robertson_from_omega(alpha, make_rotation(0.0), order);
    return RobertsonFunction(f.alpha(), f.omega(), f.f_series(), ExtremalF0{});
}

Complex f0_schwarzian(const SpiralAlpha& alpha, Complex z) {
    const Complex one_minus_z = 1.0 - z;
    return 2.0 * kI * std::polar(1.0, -2.0 * alpha.value()) * alpha.sin() * alpha.cos() / (one_minus_z * one_minus_z);
}

DiskFunction f0_closed_form(const SpiralAlpha& alpha) {
    const Complex c = alpha.scale();
    std::ostringstream name;
    name.precision(17);
    name << "f0(alpha=" << alpha.value() << ")";
    // 1 - z has positive real part on the disk, so the principal power is analytic there.
    return DiskFunction(FunctionKind::ClosedForm, name.str(), [c](Complex z) {
        const Complex u = 1.0 - z;
        const Complex fp = std::pow(u, -c);
        const Complex f = (1.0 - u * fp) / (1.0 - c);
        return Jet{f, fp, c * fp / u, c * (c + 1.0) * fp / (u * u)};
    });
}

DieudonneReport dieudonne_report(const SchwarzFunction& omega, Complex z0) {
    const double r = std::abs(z0);
    if (!(r < 1.0)) throw OutsideDisk("dieudonne_report: z0 must lie inside the unit disk");
    if (r == 0.0) throw ZeroPoint("dieudonne_report: z0 must be nonzero");
    // omega' - omega/z = z q' and |z|^2 - |omega|^2 = |z|^2 (1 - |q|^2).
    const Jet q = omega.quotient_jet(z0);
    DieudonneReport rep;
    rep.z0 = z0;
    rep.lhs = std::abs(z0 * q.d1);
    rep.rhs = r * (1.0 - std::norm(q.value)) / (1.0 - r * r);
    rep.slack = rep.rhs - rep.lhs;
    return rep;
}

}  // namespace schwarzian_lab
