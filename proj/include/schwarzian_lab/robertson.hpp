#pragma once

/**
 * Robertson class S_alpha: normalized f with Re{e^{i alpha}(1 + z f''/f')} > 0.
 *
 * Every member is generated by a Schwarz function omega through
 *
 *     f''/f' = 2 e^{-i alpha} cos(alpha) omega(z) / (z (1 - omega(z))).
 *
 * This header collects the alpha-dependent machinery: the class constructor,
 * pre-Schwarzian and Schwarzian operators, the sharp pointwise and norm
 * bounds with their maximization internals, and the extremal functions.
 */

#include <cstddef>
#include <optional>
#include <variant>

#include "schwarzian_lab/disk_functions.hpp"
#include "schwarzian_lab/grid.hpp"
#include "schwarzian_lab/power_series.hpp"

namespace schwarzian_lab {

/// Below this, Re{e^{i alpha}(1 + z f''/f')} on a grid counts as a violation.
inline constexpr double kMembershipTol = -1e-9;

/// Threshold on |f'| below which the pre-Schwarzian is refused.
inline constexpr double kVanishingDerivativeTol = 1e-14;

enum class Regime { Small, Large };  // |alpha| <= pi/6, |alpha| > pi/6

const char* to_string(Regime r);

class SpiralAlpha {
public:
    /// Throws DomainError unless -pi/2 < alpha < pi/2.
    explicit SpiralAlpha(double alpha);

    double value() const noexcept { return alpha_; }
    double sin() const noexcept { return sin_; }
    double cos() const noexcept { return cos_; }
    double sin_abs() const noexcept { return sin_abs_; }
    Regime regime() const noexcept { return regime_; }

    /// 2 e^{-i alpha} cos(alpha), the scale of the pre-Schwarzian.
    Complex scale() const noexcept;

private:
    double alpha_;
    double sin_;
    double cos_;
    double sin_abs_;
    Regime regime_;
};

struct FromOmega {};
struct ExtremalFz0p {
    double z0;
    int p;
    double b;
};
struct ExtremalF0 {};
struct ExtremalAttaining {
    double z0;
    Complex lambda;  // unimodular phase of q'(z0)
};
using Provenance = std::variant<FromOmega, ExtremalFz0p, ExtremalF0, ExtremalAttaining>;

class RobertsonFunction {
public:
    RobertsonFunction(SpiralAlpha alpha, SchwarzFunction omega, TaylorSeries f_series, Provenance provenance);

    const SpiralAlpha& alpha() const noexcept { return alpha_; }
    const SchwarzFunction& omega() const noexcept { return omega_; }
    /// Normalized Taylor expansion: coefficient 0 is 0, coefficient 1 is 1.
    const TaylorSeries& f_series() const noexcept { return f_series_; }
    const Provenance& provenance() const noexcept { return provenance_; }

    /// Closed-form evaluations through omega; valid on the whole disk.
    Complex pre_schwarzian(Complex z) const;
    Complex schwarzian(Complex z) const;

    /// The series-backed DiskFunction for f. Trust it for derivatives on |z| <= 0.9 only.
    DiskFunction series_function() const;

private:
    SpiralAlpha alpha_;
    SchwarzFunction omega_;
    TaylorSeries f_series_;
    Provenance provenance_;
};

/// Builds f from (alpha, omega) in series arithmetic: f' = exp(int P), f = int f'.
RobertsonFunction robertson_from_omega(const SpiralAlpha& alpha, const SchwarzFunction& omega,
                                       std::size_t order = kDefaultOrder);

/// f''(z)/f'(z). Throws VanishingDerivative when |f'(z)| < 1e-14.
Complex pre_schwarzian(const DiskFunction& f, Complex z);

/// f'''/f' - (3/2)(f''/f')^2 from the jet.
Complex schwarzian(const DiskFunction& f, Complex z);

/// Pre-Schwarzian of the member generated by (alpha, omega), 2 e^{-i alpha} cos(alpha) q / (1 - omega).
Complex pre_schwarzian_via_omega(const SpiralAlpha& alpha, const SchwarzFunction& omega, Complex z);

/// Schwarzian of the member generated by (alpha, omega).
///
/// With q = omega/z the z^{-2} factor cancels exactly:
///     S_f = 2 e^{-i alpha} cos(alpha) (q' + i e^{-i alpha} sin(alpha) q^2) / (1 - omega)^2,
/// so no special handling is needed at the origin.
Complex schwarzian_via_omega(const SpiralAlpha& alpha, const SchwarzFunction& omega, Complex z);

/// min over the grid of Re{e^{i alpha}(1 + z f''/f')}. Series-backed f is scanned up to |z| = 0.9.
double membership_min(const SpiralAlpha& alpha, const DiskFunction& f, const GridConfig& grid = {});
/// Same quantity using the closed-form pre-Schwarzian of a constructed member.
double membership_min(const RobertsonFunction& f, const GridConfig& grid = {});

/// (1 - sin|alpha|)/sin|alpha| in the Large regime, where it lies in (0, 1); nullopt otherwise.
std::optional<double> delta(const SpiralAlpha& alpha);

/// Critical point of g_profile: r^2 / (1 - (1 - r^2) sin|alpha|).
double s0(const SpiralAlpha& alpha, double r);

/// sin|alpha| t^2 - t + 1 - sin|alpha|; roots delta and 1.
double h_poly(const SpiralAlpha& alpha, double t);

/// (r^2 - s^2 (1 - (1 - r^2) sin|alpha|)) / (r^2 (1 - r^2) (1 - s)^2) for 0 < r < 1, 0 <= s <= r.
double g_profile(const SpiralAlpha& alpha, double r, double s);

/// Sharp bound on |S_f(z)| over S_alpha at |z| = r.
double pointwise_bound(const SpiralAlpha& alpha, double r);

/// Sharp bound on sup (1 - |z|^2)^2 |S_f(z)| over S_alpha.
double schwarzian_norm_bound(const SpiralAlpha& alpha);

/// 4 cos(alpha).
double pre_schwarzian_norm_bound(const SpiralAlpha& alpha);

/// -1 for alpha >= 0, +1 for alpha < 0.
int extremal_p(const SpiralAlpha& alpha);

/// True when |alpha| <= pi/6 and |z0| < 1, or |alpha| > pi/6 and |z0| < delta.
bool extremal_admissible(const SpiralAlpha& alpha, double z0);

/// Zero b of the degree-2 Blaschke product attaining the pointwise bound at real z0.
/// Throws ConditionViolation when (alpha, z0) is not admissible.
double extremal_b(const SpiralAlpha& alpha, double z0);

/// Member generated by omega = blaschke2(p, b), so that omega(z0) = s0(|z0|).
/// For alpha != 0 its |S_f(z0)| falls short of extremal_value; see extremal_attaining.
RobertsonFunction extremal_fz0p(const SpiralAlpha& alpha, double z0, std::size_t order = kDefaultOrder);
/// Member with omega(z0) = s0(|z0|) whose |S_f(z0)| equals extremal_value(alpha, z0).
///
/// omega = z q with q the disk automorphism fixing q(z0) = s0/z0 and
/// q'(z0) = lambda (1 - q(z0)^2)/(1 - z0^2), where lambda = sign(alpha) i e^{-i alpha}
/// aligns q' with the q^2 term of the Schwarzian (lambda = -1 at alpha = 0,
/// which reproduces extremal_fz0p). Same admissibility as extremal_b.
RobertsonFunction extremal_attaining(const SpiralAlpha& alpha, double z0, std::size_t order = kDefaultOrder);

/// |S_{f_{z0,p}}(z0)| in closed form.
double extremal_value(const SpiralAlpha& alpha, double z0);

/// Member generated by omega(z) = z.
RobertsonFunction extremal_f0(const SpiralAlpha& alpha, std::size_t order = kDefaultOrder);

/// 2 i e^{-2 i alpha} sin(alpha) cos(alpha) / (1 - z)^2.
Complex f0_schwarzian(const SpiralAlpha& alpha, Complex z);

/// f0 in closed form, f0(z) = (1 - (1 - z)^{1 - c}) / (1 - c) with c = 2 e^{-i alpha} cos(alpha).
DiskFunction f0_closed_form(const SpiralAlpha& alpha);

struct DieudonneReport {
    Complex z0;
    double lhs = 0.0;    // |omega'(z0) - omega(z0)/z0|
    double rhs = 0.0;    // (|z0|^2 - |omega(z0)|^2) / (|z0| (1 - |z0|^2))
    double slack = 0.0;  // rhs - lhs
};

/// Throws OutsideDisk for |z0| >= 1 and ZeroPoint for z0 = 0.
DieudonneReport dieudonne_report(const SchwarzFunction& omega, Complex z0);

}  // namespace schwarzian_lab
