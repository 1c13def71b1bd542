#pragma once

// The operations behind each CLI subcommand. They return values; the CLI does the I/O.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "schwarzian_lab/acceptance.hpp"
#include "schwarzian_lab/function_spec.hpp"
#include "schwarzian_lab/norm_estimator.hpp"
#include "schwarzian_lab/report.hpp"

namespace schwarzian_lab {

/// identity and series build plain DiskFunctions; f0, fz0p and robertson build
/// Robertson-class members evaluated in closed form through omega.
using BuiltFunction = std::variant<DiskFunction, RobertsonFunction>;

/// Throws ConditionViolation (a DomainError) when fz0p parameters are not admissible.
BuiltFunction build_function(const FunctionSpec& spec, std::size_t order = kDefaultOrder);

enum class NormKind { Pre, Schwarzian };

NormKind parse_norm_kind(const std::string& text);

Report cmd_bound(double alpha, std::optional<double> r = std::nullopt);
Report cmd_norm(const FunctionSpec& spec, NormKind kind, const GridConfig& cfg = {});
Report cmd_extremal(double alpha, double z0);

inline constexpr const char* kSweepHeader =
    "alpha,regime,delta_or_blank,S_norm_bound,P_norm_bound,numeric_S_norm_of_f0,numeric_sharpness_ratio";

/// CSV text, one row per alpha; alphas are placed symmetrically about the interval midpoint.
std::string cmd_sweep(double alpha_min, double alpha_max, std::size_t steps, const GridConfig& cfg = {});

struct VerifyOutcome {
    Report report;
    std::vector<CriterionResult> criteria;
    bool passed = false;
};

VerifyOutcome cmd_verify(AcceptanceContext& ctx);

}  // namespace schwarzian_lab
