#include "schwarzian_lab/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "schwarzian_lab/errors.hpp"

namespace schwarzian_lab {

namespace {

void echo_grid(Report& rep, const GridConfig& cfg) {
    rep.parameters["grid.n_radii"] = static_cast<std::int64_t>(cfg.n_radii);
    rep.parameters["grid.n_angles"] = static_cast<std::int64_t>(cfg.n_angles);
    rep.parameters["grid.r_max"] = cfg.r_max;
    rep.parameters["grid.refine_iters"] = static_cast<std::int64_t>(cfg.refine_iters);
    rep.parameters["grid.refine_tol"] = cfg.refine_tol;
}

std::optional<SpiralAlpha> spec_alpha(const FunctionSpec& spec) {
    if (!spec.params.count("alpha")) return std::nullopt;
    return SpiralAlpha(spec.real("alpha"));
}

}  // namespace

BuiltFunction build_function(const FunctionSpec& spec, std::size_t order) {
    switch (spec.family) {
    case Family::Identity:
        return make_identity();
    case Family::Series:
        return make_series_function(TaylorSeries(spec.coeffs()), spec.canonical());
    case Family::F0:
        return extremal_f0(SpiralAlpha(spec.real("alpha")), order);
    case Family::Fz0p:
        return extremal_fz0p(SpiralAlpha(spec.real("alpha")), spec.real("z0"), order);
    case Family::Robertson: {
        const int p = spec.real("p") > 0 ? 1 : -1;
        return robertson_from_omega(SpiralAlpha(spec.real("alpha")), make_blaschke2(p, spec.real("b")), order);
    }
    }
    throw DomainError("unknown family");
}

NormKind parse_norm_kind(const std::string& text) {
    if (text == "pre") return NormKind::Pre;
    if (text == "schwarzian") return NormKind::Schwarzian;
    throw DomainError("norm kind must be 'pre' or 'schwarzian', got '" + text + "'");
}

Report cmd_bound(double alpha_value, std::optional<double> r) {
    const SpiralAlpha alpha(alpha_value);
    Report rep;
    rep.command = "bound";
    rep.parameters["alpha"] = alpha.value();
    rep.results["S_norm_bound"] = schwarzian_norm_bound(alpha);
    rep.results["P_norm_bound"] = pre_schwarzian_norm_bound(alpha);
    rep.results["regime"] = std::string(to_string(alpha.regime()));
    if (auto d = delta(alpha)) rep.results["delta"] = *d;
    else rep.results["delta"] = nullptr;
    rep.provenance["S_norm_bound"] = "sharp Schwarzian norm bound over S_alpha";
    rep.provenance["P_norm_bound"] = "sharp pre-Schwarzian norm bound over S_alpha, 4 cos(alpha)";
    rep.provenance["delta"] = "branch radius (1 - sin|alpha|)/sin|alpha| of the pointwise bound, Large regime only";
    if (r) {
        rep.parameters["r"] = *r;
        rep.results["pointwise_bound"] = pointwise_bound(alpha, *r);
        rep.provenance["pointwise_bound"] = "sharp bound on |S_f(z)| at |z| = r";
    }
    return rep;
}

Report cmd_norm(const FunctionSpec& spec, NormKind kind, const GridConfig& cfg) {
    const BuiltFunction built = build_function(spec);
    NormResult res;
    if (const auto* f = std::get_if<RobertsonFunction>(&built)) {
        res = kind == NormKind::Pre ? norm_pre_schwarzian(*f, cfg) : norm_schwarzian(*f, cfg);
    } else {
        const auto& g = std::get<DiskFunction>(built);
        res = kind == NormKind::Pre ? norm_pre_schwarzian(g, cfg) : norm_schwarzian(g, cfg);
    }

    Report rep;
    rep.command = "norm";
    rep.parameters["spec"] = spec.canonical();
    rep.parameters["kind"] = std::string(kind == NormKind::Pre ? "pre" : "schwarzian");
    echo_grid(rep, cfg);
    rep.results["value"] = res.value;
    rep.results["argmax"] = res.argmax;
    rep.results["boundary_attained"] = res.boundary_attained;
    rep.results["truncation_limited"] = res.truncation_limited;
    rep.results["evaluations"] = static_cast<std::int64_t>(res.evaluations);
    rep.provenance["value"] = kind == NormKind::Pre ? "grid supremum of (1-|z|^2)|P_f(z)|, a lower bound"
                                                    : "grid supremum of (1-|z|^2)^2|S_f(z)|, a lower bound";
    if (auto alpha = spec_alpha(spec)) {
        const double bound = kind == NormKind::Pre ? pre_schwarzian_norm_bound(*alpha) : schwarzian_norm_bound(*alpha);
        rep.results["bound"] = bound;
        rep.results["ratio"] = res.value / bound;
        rep.provenance["bound"] = "sharp norm bound over S_alpha";
    }
    return rep;
}

Report cmd_extremal(double alpha_value, double z0) {
    const SpiralAlpha alpha(alpha_value);
    const RobertsonFunction f = extremal_fz0p(alpha, z0);
    const double value = extremal_value(alpha, z0);
    const Complex s = f.schwarzian(z0);
    const RobertsonFunction g = extremal_attaining(alpha, z0);
    const Complex sg = g.schwarzian(z0);
    const double w = 1.0 - z0 * z0;

    Report rep;
    rep.command = "extremal";
    rep.parameters["alpha"] = alpha.value();
    rep.parameters["z0"] = z0;
    rep.results["p"] = static_cast<std::int64_t>(extremal_p(alpha));
    rep.results["b"] = extremal_b(alpha, z0);
    rep.results["s0"] = s0(alpha, std::abs(z0));
    rep.results["omega_at_z0"] = f.omega()(z0);
    rep.results["extremal_value"] = value;
    rep.results["schwarzian_at_z0"] = s;
    rep.results["abs_schwarzian_at_z0"] = std::abs(s);
    rep.results["pointwise_bound"] = pointwise_bound(alpha, std::abs(z0));
    rep.results["weighted_value"] = w * w * value;
    rep.results["S_norm_bound"] = schwarzian_norm_bound(alpha);
    rep.results["attaining_schwarzian_at_z0"] = sg;
    rep.results["attaining_abs_schwarzian_at_z0"] = std::abs(sg);
    rep.results["membership_min"] = std::min(membership_min(f), membership_min(g));
    rep.provenance["b"] = "zero of the degree-2 Blaschke product p z (z - b)/(1 - b z) generating f";
    rep.provenance["extremal_value"] = "closed-form sharp value of |S(z0)| over the class, attained by the phase-aligned construction";
    rep.provenance["abs_schwarzian_at_z0"] =
        "|S_f(z0)| of the real-zero construction; equals extremal_value only at alpha = 0";
    rep.provenance["attaining_abs_schwarzian_at_z0"] =
        "|S_g(z0)| for the phase-aligned Blaschke construction; equals extremal_value";
    rep.provenance["omega_at_z0"] = "equals s0(|z0|), the maximizer of the bound profile";
    return rep;
}

std::string cmd_sweep(double alpha_min, double alpha_max, std::size_t steps, const GridConfig& cfg) {
    if (steps == 0) throw DomainError("sweep: steps must be >= 1");
    if (!(alpha_min <= alpha_max)) throw DomainError("sweep: alpha_min must not exceed alpha_max");
    const double mid = 0.5 * (alpha_min + alpha_max);
    const double half = 0.5 * (alpha_max - alpha_min);
    const double last = static_cast<double>(steps - 1);

    std::ostringstream os;
    os << kSweepHeader << '\n';
    for (std::size_t i = 0; i < steps; ++i) {
        // mid + half * k / last with k antisymmetric, so symmetric ranges give exactly mirrored alphas
        const double a = steps == 1 ? alpha_min
                                    : mid + half * (2.0 * static_cast<double>(i) - last) / last;
        const SpiralAlpha alpha(a);
        const double s_bound = schwarzian_norm_bound(alpha);
        const double numeric = norm_schwarzian(f0_closed_form(alpha), cfg).value;
        const auto d = delta(alpha);
        os << format_double(alpha.value()) << ',' << to_string(alpha.regime()) << ','
           << (d ? format_double(*d) : std::string()) << ',' << format_double(s_bound) << ','
           << format_double(pre_schwarzian_norm_bound(alpha)) << ',' << format_double(numeric) << ','
           << format_double(numeric / s_bound) << '\n';
    }
    return os.str();
}

VerifyOutcome cmd_verify(AcceptanceContext& ctx) {
    VerifyOutcome out;
    out.criteria = run_acceptance(ctx);
    out.passed = true;
    Report& rep = out.report;
    rep.command = "verify";
    rep.parameters["seed"] = static_cast<std::int64_t>(ctx.seed);
    rep.parameters["tool_version"] = std::string(kVersion);
    echo_grid(rep, ctx.grid);
    for (const auto& c : out.criteria) {
        out.passed = out.passed && c.passed;
        rep.results[c.id + ".passed"] = c.passed;
        rep.results[c.id + ".measured"] = c.measured;
        rep.results[c.id + ".threshold"] = c.threshold;
        rep.results[c.id + ".detail"] = c.detail;
        rep.provenance[c.id] = c.description;
    }
    rep.results["all_passed"] = out.passed;
    return out;
}

}  // namespace schwarzian_lab
