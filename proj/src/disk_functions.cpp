#include "schwarzian_lab/disk_functions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "schwarzian_lab/errors.hpp"

namespace schwarzian_lab {

namespace {

void require_inside(Complex z, const char* who) {
    if (!(std::abs(z) < 1.0)) {
        std::ostringstream os;
        os << who << ": point " << z << " is not inside the unit disk";
        throw OutsideDisk(os.str());
    }
}

// Leibniz rule up to third order.
Jet product(const Jet& u, const Jet& v) {
    return {u.value * v.value,
            u.d1 * v.value + u.value * v.d1,
            u.d2 * v.value + 2.0 * u.d1 * v.d1 + u.value * v.d2,
            u.d3 * v.value + 3.0 * u.d2 * v.d1 + 3.0 * u.d1 * v.d2 + u.value * v.d3};
}

// (z - a) / (1 - conj(a) z) and its derivatives.
Jet mobius_factor(Complex a, Complex z) {
    const Complex ac = std::conj(a);
    const Complex den = 1.0 - ac * z;
    const double k = 1.0 - std::norm(a);
    const Complex d1 = k / (den * den);
    return {(z - a) / den, d1, 2.0 * ac * d1 / den, 6.0 * ac * ac * d1 / (den * den)};
}

TaylorSeries mobius_factor_series(Complex a, std::size_t order) {
    TaylorSeries s(order);
    s[0] = -a;
    const Complex ac = std::conj(a);
    const double k = 1.0 - std::norm(a);
    Complex power = 1.0;
    for (std::size_t n = 1; n <= order; ++n) {
        s[n] = k * power;
        power *= ac;
    }
    return s;
}

}  // namespace

DiskFunction::DiskFunction(FunctionKind kind, std::string name, JetFn jet)
    : kind_(kind), name_(std::move(name)), jet_(std::move(jet)) {}

Jet DiskFunction::jet(Complex z) const {
    require_inside(z, "DiskFunction::jet");
    return jet_(z);
}

DiskFunction make_series_function(TaylorSeries series, std::string name) {
    return DiskFunction(FunctionKind::SeriesBacked, std::move(name),
                        [s = std::move(series)](Complex z) { return s.jet(z); });
}

DiskFunction make_mobius(Complex a, Complex b, Complex c, Complex d, std::string name) {
    const Complex det = a * d - b * c;
    if (det == Complex{}) throw BadParameter("make_mobius: degenerate coefficients (ad - bc = 0)");
    return DiskFunction(FunctionKind::ClosedForm, std::move(name), [=](Complex z) {
        const Complex den = c * z + d;
        const Complex d1 = det / (den * den);
        return Jet{(a * z + b) / den, d1, -2.0 * c * d1 / den, 6.0 * c * c * d1 / (den * den)};
    });
}

DiskFunction make_identity() {
    return DiskFunction(FunctionKind::ClosedForm, "identity",
                        [](Complex z) { return Jet{z, 1.0, 0.0, 0.0}; });
}

SchwarzFunction::SchwarzFunction(SchwarzFamily family, Complex unimodular, std::vector<Complex> zeros)
    : family_(family), unimodular_(unimodular), zeros_(std::move(zeros)) {}

Jet SchwarzFunction::quotient_jet(Complex z) const {
    Jet q{unimodular_, 0.0, 0.0, 0.0};
    for (const auto& a : zeros_) q = product(q, mobius_factor(a, z));
    return q;
}

Jet SchwarzFunction::jet(Complex z) const {
    require_inside(z, "SchwarzFunction::jet");
    // omega = z q
    const Jet q = quotient_jet(z);
    return {z * q.value, q.value + z * q.d1, 2.0 * q.d1 + z * q.d2, 3.0 * q.d2 + z * q.d3};
}

DiskFunction SchwarzFunction::as_disk_function() const {
    return DiskFunction(FunctionKind::ClosedForm, describe(), [self = *this](Complex z) { return self.jet(z); });
}

TaylorSeries SchwarzFunction::quotient_series(std::size_t order) const {
    TaylorSeries q = TaylorSeries::constant(unimodular_, order);
    for (const auto& a : zeros_) q = series_mul(q, mobius_factor_series(a, order));
    return q;
}

TaylorSeries SchwarzFunction::series(std::size_t order) const {
    return quotient_series(order).shifted_up(1);
}

std::string SchwarzFunction::describe() const {
    std::ostringstream os;
    os.precision(17);
    switch (family_) {
    case SchwarzFamily::Rotation:
        os << "rotation(theta=" << std::arg(unimodular_) << ")";
        break;
    case SchwarzFamily::Blaschke2:
        os << "blaschke2(p=" << unimodular_.real() << ", b=" << zeros_.front().real() << ")";
        break;
    case SchwarzFamily::BlaschkeFix0:
        os << "blaschke_fix0(theta=" << std::arg(unimodular_) << ", zeros=[";
        for (std::size_t i = 0; i < zeros_.size(); ++i) os << (i ? ", " : "") << zeros_[i];
        os << "])";
        break;
    }
    return os.str();
}

SchwarzFunction make_rotation(double theta) {
    return SchwarzFunction(SchwarzFamily::Rotation, std::polar(1.0, theta), {});
}

SchwarzFunction make_blaschke2(int p, double b) {
    if (p != 1 && p != -1) throw BadParameter("blaschke2: p must be +1 or -1, got " + std::to_string(p));
    if (!(std::abs(b) < 1.0)) throw BadParameter("blaschke2: |b| must be < 1, got " + std::to_string(b));
    return SchwarzFunction(SchwarzFamily::Blaschke2, Complex(p, 0.0), {Complex(b, 0.0)});
}

SchwarzFunction make_blaschke_fix0(double theta, std::vector<Complex> zeros) {
    for (const auto& a : zeros)
        if (!(std::abs(a) < 1.0)) throw BadParameter("blaschke_fix0: every zero must satisfy |a| < 1");
    return SchwarzFunction(SchwarzFamily::BlaschkeFix0, std::polar(1.0, theta), std::move(zeros));
}

CertReport schwarz_certify(const DiskFunction& omega, const GridConfig& grid) {
    grid.validate();
    GridConfig g = grid;
    if (omega.kind() == FunctionKind::SeriesBacked) g.r_max = std::min(g.r_max, kSeriesRadiusCap);

    CertReport rep;
    rep.value_at_origin = std::abs(omega(0.0));
    const auto radii = g.radii();
    const auto angles = g.angles();
    for (double r : radii) {
        for (double t : angles) {
            const Complex z = std::polar(r, t);
            const Jet j = omega.jet(z);
            const double m = std::abs(j.value);
            rep.max_modulus_excess = std::max(rep.max_modulus_excess, m - r);
            const double pick = std::abs(j.d1) * (1.0 - r * r) - (1.0 - m * m);
            rep.max_schwarz_pick_defect = std::max(rep.max_schwarz_pick_defect, pick);
            ++rep.points;
        }
    }
    return rep;
}

CertReport schwarz_certify(const SchwarzFunction& omega, const GridConfig& grid) {
    return schwarz_certify(omega.as_disk_function(), grid);
}

}  // namespace schwarzian_lab
