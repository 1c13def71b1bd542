#pragma once

// Hyperbolic sup-norms sup (1 - |z|^2)^k |F(z)| estimated on a polar grid.

#include <cstddef>
#include <functional>

#include "schwarzian_lab/disk_functions.hpp"
#include "schwarzian_lab/grid.hpp"
#include "schwarzian_lab/robertson.hpp"

namespace schwarzian_lab {

struct NormResult {
    double value = 0.0;  // a lower bound for the true supremum
    Complex argmax{};
    bool boundary_attained = false;   // argmax radius within one grid cell of the scanned r_max
    bool truncation_limited = false;  // scan capped at |z| = 0.9 for a series-backed function
    std::size_t evaluations = 0;
};

using PointwiseMap = std::function<Complex(Complex)>;

/// Coarse polar scan of (1 - |z|^2)^k |F(z)|, then golden-section searches along
/// the radial line and the circle through the coarse maximizer. Both searches
/// only add points, so the result is nondecreasing in refine_iters.
///
/// Throws DomainError for k other than 1 or 2 and EvaluationFailure when F throws.
NormResult weighted_sup(const PointwiseMap& F, int weight_power, const GridConfig& cfg = {});

NormResult norm_pre_schwarzian(const DiskFunction& f, const GridConfig& cfg = {});
NormResult norm_schwarzian(const DiskFunction& f, const GridConfig& cfg = {});

/// Closed-form evaluation through omega; scans the full r_max.
NormResult norm_pre_schwarzian(const RobertsonFunction& f, const GridConfig& cfg = {});
NormResult norm_schwarzian(const RobertsonFunction& f, const GridConfig& cfg = {});

}  // namespace schwarzian_lab
