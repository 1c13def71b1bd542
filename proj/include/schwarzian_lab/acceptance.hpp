#pragma once

// The end-to-end verification suite behind `schwarzian_lab verify` and the
// acceptance test binary. Every tolerance below is fixed; nothing is tuned at run time.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "schwarzian_lab/grid.hpp"
#include "schwarzian_lab/robertson.hpp"

namespace schwarzian_lab {

struct CriterionResult {
    std::string id;
    std::string description;
    bool passed = false;
    double measured = 0.0;   // worst observed quantity
    double threshold = 0.0;  // the tolerance or limit it is compared with
    double seconds = 0.0;
    double time_limit = 0.0;  // 0 when the criterion has no runtime limit
    std::string detail;
};

using PointwiseBoundFn = std::function<double(const SpiralAlpha&, double)>;

struct AcceptanceContext {
    std::uint64_t seed = 0;
    GridConfig grid{};
    /// Injected so the domination check can be mutation-tested.
    PointwiseBoundFn pointwise = [](const SpiralAlpha& a, double r) { return pointwise_bound(a, r); };
    /// Every RobertsonFunction built by the criteria, audited by check_membership.
    std::vector<RobertsonFunction> constructed;
};

CriterionResult check_convex_sharpness(AcceptanceContext& ctx);
CriterionResult check_large_alpha_norm(AcceptanceContext& ctx);
CriterionResult check_small_alpha_norm(AcceptanceContext& ctx);
CriterionResult check_pre_schwarzian_norm(AcceptanceContext& ctx);
CriterionResult check_pointwise_domination(AcceptanceContext& ctx);
CriterionResult check_branch_continuity(AcceptanceContext& ctx);
CriterionResult check_critical_point(AcceptanceContext& ctx);
CriterionResult check_dieudonne(AcceptanceContext& ctx);
CriterionResult check_series_consistency(AcceptanceContext& ctx);
CriterionResult check_membership(AcceptanceContext& ctx);

/// Runs every criterion in order; membership runs last so it sees all constructions.
std::vector<CriterionResult> run_acceptance(AcceptanceContext& ctx);

/// Draws from rotation, blaschke2 and blaschke_fix0 (total degree <= max_degree),
/// with Blaschke zeros of modulus at most max_zero_modulus.
SchwarzFunction random_schwarz_function(std::mt19937_64& rng, std::size_t max_degree = 3,
                                        double max_zero_modulus = 0.99);

/// Reads SCHWARZIAN_LAB_SEED (default 0).
std::uint64_t seed_from_environment();

}  // namespace schwarzian_lab
