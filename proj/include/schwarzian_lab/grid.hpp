#pragma once

#include <cstddef>
#include <vector>

namespace schwarzian_lab {

/// Polar sampling of the disk: Chebyshev-spaced radii in [0, r_max] times
/// equispaced angles, plus golden-section refinement settings.
struct GridConfig {
    std::size_t n_radii = 64;
    std::size_t n_angles = 256;
    double r_max = 1.0 - 1e-4;
    std::size_t refine_iters = 40;
    double refine_tol = 1e-12;

    /// Throws DomainError unless r_max is in (0, 1) and both counts are >= 2.
    void validate() const;

    /// Radii clustered at both ends of [0, r_max]; first is 0, last is r_max.
    std::vector<double> radii() const;
    std::vector<double> angles() const;

    friend bool operator==(const GridConfig&, const GridConfig&) = default;
};

/// Radius beyond which truncated Taylor series are not trusted for derivatives.
inline constexpr double kSeriesRadiusCap = 0.9;

}  // namespace schwarzian_lab
