#pragma once

// Analytic maps of the unit disk with value and derivatives up to third order.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "schwarzian_lab/grid.hpp"
#include "schwarzian_lab/power_series.hpp"

namespace schwarzian_lab {

enum class FunctionKind { ClosedForm, SeriesBacked };

/// An evaluable analytic function on |z| < 1, type-erased behind its jet.
class DiskFunction {
public:
    using JetFn = std::function<Jet(Complex)>;

    DiskFunction(FunctionKind kind, std::string name, JetFn jet);

    /// (f, f', f'', f''') at z. Throws OutsideDisk when |z| >= 1.
    Jet jet(Complex z) const;
    Complex operator()(Complex z) const { return jet(z).value; }

    FunctionKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }

private:
    FunctionKind kind_;
    std::string name_;
    JetFn jet_;
};

/// Series-backed function; the jet differentiates the truncated polynomial exactly.
DiskFunction make_series_function(TaylorSeries series, std::string name = "series");

/// Closed-form Moebius map (a z + b) / (c z + d).
DiskFunction make_mobius(Complex a, Complex b, Complex c, Complex d, std::string name = "mobius");

DiskFunction make_identity();

enum class SchwarzFamily { Rotation, Blaschke2, BlaschkeFix0 };

/// A Schwarz function omega(z) = u * z * prod_j (z - a_j) / (1 - conj(a_j) z)
/// with |u| = 1 and |a_j| < 1, so omega(0) = 0 and omega maps the disk into itself.
///
/// The quotient q(z) = omega(z)/z is carried in factored form, so it is
/// analytic at the origin by construction and never computed by division.
class SchwarzFunction {
public:
    SchwarzFamily family() const noexcept { return family_; }
    Complex unimodular() const noexcept { return unimodular_; }
    std::span<const Complex> zeros() const noexcept { return zeros_; }
    std::size_t degree() const noexcept { return zeros_.size() + 1; }

    Jet quotient_jet(Complex z) const;
    Complex quotient(Complex z) const { return quotient_jet(z).value; }

    /// Throws OutsideDisk when |z| >= 1.
    Jet jet(Complex z) const;
    Complex operator()(Complex z) const { return jet(z).value; }

    DiskFunction as_disk_function() const;

    TaylorSeries quotient_series(std::size_t order = kDefaultOrder) const;
    TaylorSeries series(std::size_t order = kDefaultOrder) const;

    std::string describe() const;

    friend SchwarzFunction make_rotation(double theta);
    friend SchwarzFunction make_blaschke2(int p, double b);
    friend SchwarzFunction make_blaschke_fix0(double theta, std::vector<Complex> zeros);

private:
    SchwarzFunction(SchwarzFamily family, Complex unimodular, std::vector<Complex> zeros);

    SchwarzFamily family_;
    Complex unimodular_;
    std::vector<Complex> zeros_;
};

/// omega(z) = e^{i theta} z.
SchwarzFunction make_rotation(double theta);

/// phi(z) = p z (z - b) / (1 - b z). Throws BadParameter unless p = +-1 and |b| < 1.
SchwarzFunction make_blaschke2(int p, double b);

/// e^{i theta} z prod (z - a_j)/(1 - conj(a_j) z). Throws BadParameter when some |a_j| >= 1.
SchwarzFunction make_blaschke_fix0(double theta, std::vector<Complex> zeros);

/// Grid audit of the Schwarz-function conditions. Violations are reported, not thrown.
struct CertReport {
    double max_modulus_excess = 0.0;     // max |omega(z)| - |z|
    double value_at_origin = 0.0;        // |omega(0)|
    double max_schwarz_pick_defect = 0.0;  // max(0, |omega'|(1-|z|^2) - (1-|omega|^2))
    std::size_t points = 0;

    bool certified(double tol = 1e-12) const {
        return max_modulus_excess <= tol && value_at_origin <= tol && max_schwarz_pick_defect <= tol;
    }
};

CertReport schwarz_certify(const DiskFunction& omega, const GridConfig& grid = {});
CertReport schwarz_certify(const SchwarzFunction& omega, const GridConfig& grid = {});

}  // namespace schwarzian_lab
