#include "schwarzian_lab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "schwarzian_lab/norm_estimator.hpp"

namespace schwarzian_lab {

namespace {

constexpr double kPi = std::numbers::pi;

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Each criterion gets its own stream so reordering or skipping one does not perturb another.
std::mt19937_64 stream(std::uint64_t seed, std::uint64_t criterion) {
    std::seed_seq seq{seed, criterion};
    return std::mt19937_64(seq);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex random_point(std::mt19937_64& rng, double r_lo, double r_hi) {
    return std::polar(uniform(rng, r_lo, r_hi), uniform(rng, 0.0, 2.0 * kPi));
}

SpiralAlpha random_alpha(std::mt19937_64& rng) { return SpiralAlpha(uniform(rng, -1.5, 1.5)); }

CriterionResult criterion(std::string id, std::string description) {
    CriterionResult r;
    r.id = std::move(id);
    r.description = std::move(description);
    return r;
}

CriterionResult finish(CriterionResult r, const Stopwatch& sw, bool value_ok) {
    r.seconds = sw.seconds();
    const bool time_ok = r.time_limit == 0.0 || r.seconds < r.time_limit;
    r.passed = value_ok && time_ok;
    if (!time_ok) r.detail += " [runtime limit exceeded]";
    return r;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(10);
    os << x;
    return os.str();
}

}  // namespace

SchwarzFunction random_schwarz_function(std::mt19937_64& rng, std::size_t max_degree, double max_zero_modulus) {
    const int family = std::uniform_int_distribution<int>(0, static_cast<int>(std::min<std::size_t>(max_degree, 3)) - 1)(rng);
    if (family == 0) return make_rotation(uniform(rng, 0.0, 2.0 * kPi));
    if (family == 1) {
        const int p = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
        return make_blaschke2(p, uniform(rng, -max_zero_modulus, max_zero_modulus));
    }
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_degree - 1)(rng);
    std::vector<Complex> zeros;
    for (std::size_t k = 0; k < n; ++k) zeros.push_back(random_point(rng, 0.0, max_zero_modulus));
    return make_blaschke_fix0(uniform(rng, 0.0, 2.0 * kPi), std::move(zeros));
}

CriterionResult check_convex_sharpness(AcceptanceContext& ctx) {
    Stopwatch sw;
    CriterionResult r = criterion("convex_sharpness",
                      "alpha=0: (1-z0^2)^2 |S(z0)| = 2 for the extremal f_{z0,p}, z0 in {0.3, 0.5, 0.7}");
    r.threshold = 1e-9;
    r.time_limit = 1.0;
    const SpiralAlpha alpha(0.0);
    double worst = 0.0;
    for (double z0 : {0.3, 0.5, 0.7}) {
        const RobertsonFunction f = extremal_fz0p(alpha, z0);
        const double w = 1.0 - z0 * z0;
        worst = std::max(worst, std::abs(w * w * std::abs(schwarzian_via_omega(alpha, f.omega(), z0)) - 2.0));
        ctx.constructed.push_back(f);
    }
    r.measured = worst;
    r.detail = "max deviation from 2: " + fmt(worst);
    return finish(r, sw, worst <= r.threshold);
}

CriterionResult check_large_alpha_norm(AcceptanceContext& ctx) {
    Stopwatch sw;
    CriterionResult r = criterion("large_alpha_norm_sharpness",
                      "||S_f0|| in [0.99 B, B + 1e-6], B = 8 cos(a) sin|a|, a in {pi/4, pi/3, 1.2}");
    r.threshold = 0.99;
    r.time_limit = 5.0;
    bool ok = true;
    double worst_ratio = 1e300;
    std::ostringstream detail;
    for (double a : {kPi / 4, kPi / 3, 1.2}) {
        const SpiralAlpha alpha(a);
        const double bound = 8.0 * alpha.cos() * alpha.sin_abs();
        const NormResult n = norm_schwarzian(f0_closed_form(alpha), ctx.grid);
        const double ratio = n.value / bound;
        worst_ratio = std::min(worst_ratio, ratio);
        ok = ok && n.value >= 0.99 * bound && n.value <= bound + 1e-6;
        detail << "a=" << fmt(a) << " ratio=" << fmt(ratio) << "; ";
        ctx.constructed.push_back(extremal_f0(alpha));
    }
    r.measured = worst_ratio;
    r.detail = detail.str();
    return finish(r, sw, ok);
}

CriterionResult check_small_alpha_norm(AcceptanceContext& ctx) {
    Stopwatch sw;
    CriterionResult r = criterion("small_alpha_norm_bound",
                      "|a| <= pi/6: extremal values reach 0.99 B and numeric norms of the extremals stay <= B + 1e-6");
    r.threshold = 0.99;
    bool ok = true;
    double worst_ratio = 1e300;
    double worst_excess = -1e300;
    for (double a : {0.0, 0.2, kPi / 6}) {
        const SpiralAlpha alpha(a);
        const double bound = schwarzian_norm_bound(alpha);
        double best = 0.0;
        double attained = 0.0;
        for (double z0 : {0.9, 0.99}) {
            const double w = 1.0 - z0 * z0;
            best = std::max(best, w * w * extremal_value(alpha, z0));
            for (const RobertsonFunction& f : {extremal_fz0p(alpha, z0), extremal_attaining(alpha, z0)}) {
                const NormResult n = norm_schwarzian(f, ctx.grid);
                worst_excess = std::max(worst_excess, n.value - bound);
                ok = ok && n.value <= bound + 1e-6;
                ctx.constructed.push_back(f);
            }
            const RobertsonFunction g = extremal_attaining(alpha, z0);
            attained = std::max(attained, w * w * std::abs(g.schwarzian(z0)));
        }
        worst_ratio = std::min({worst_ratio, best / bound, attained / bound});
        ok = ok && best >= 0.99 * bound && attained >= 0.99 * bound;
    }
    r.measured = worst_ratio;
    r.detail = "min sharpness ratio " + fmt(worst_ratio) + ", max numeric excess over bound " + fmt(worst_excess);
    return finish(r, sw, ok);
}

CriterionResult check_pre_schwarzian_norm(AcceptanceContext& ctx) {
    Stopwatch sw;
    CriterionResult r = criterion("pre_schwarzian_norm", "||P_f0|| = 4 cos(a) within 0.1%, a in {0, pi/4, pi/3}");
    r.threshold = 1e-3;
    r.time_limit = 2.0;
    double worst = 0.0;
    for (double a : {0.0, kPi / 4, kPi / 3}) {
        const SpiralAlpha alpha(a);
        const double bound = pre_schwarzian_norm_bound(alpha);
        const NormResult n = norm_pre_schwarzian(f0_closed_form(alpha), ctx.grid);
        worst = std::max(worst, std::abs(n.value - bound) / bound);
    }
    r.measured = worst;
    r.detail = "max relative error " + fmt(worst);
    return finish(r, sw, worst <= r.threshold);
}

CriterionResult check_pointwise_domination(AcceptanceContext& ctx) {
    Stopwatch sw;
    CriterionResult r = criterion("pointwise_domination",
                      "|S_f(z)| <= pointwise bound + 1e-9 on 10^4 random (alpha, omega, z), degree <= 3");
    r.threshold = 1e-9;
    r.time_limit = 5.0;
    auto rng = stream(ctx.seed, 5);
    std::size_t violations = 0;
    double worst = -1e300;
    for (int i = 0; i < 10000; ++i) {
        const SpiralAlpha alpha = random_alpha(rng);
        const SchwarzFunction omega = random_schwarz_function(rng, 3);
        const Complex z = random_point(rng, 1e-3, 0.95);
        const double excess = std::abs(schwarzian_via_omega(alpha, omega, z)) - ctx.pointwise(alpha, std::abs(z));
        worst = std::max(worst, excess);
        if (excess > r.threshold) ++violations;
    }
    r.measured = static_cast<double>(violations);
    r.detail = std::to_string(violations) + " violations, max excess " + fmt(worst);
    return finish(r, sw, violations == 0);
}

CriterionResult check_branch_continuity(AcceptanceContext&) {
    Stopwatch sw;
    CriterionResult r = criterion("branch_continuity", "pointwise bound continuous at delta; norm bound continuous at pi/6");
    r.threshold = 1e-6;
    double worst = 0.0;
    for (double a : {kPi / 4, kPi / 3}) {
        const SpiralAlpha alpha(a);
        const double d = *delta(alpha);
        worst = std::max(worst, std::abs(pointwise_bound(alpha, d - 1e-9) - pointwise_bound(alpha, d + 1e-9)));
    }
    worst = std::max(worst, std::abs(schwarzian_norm_bound(SpiralAlpha(kPi / 6 - 1e-9)) -
                                     schwarzian_norm_bound(SpiralAlpha(kPi / 6 + 1e-9))));
    r.measured = worst;
    r.detail = "max jump " + fmt(worst);
    return finish(r, sw, worst <= r.threshold);
}

CriterionResult check_critical_point(AcceptanceContext& ctx) {
    Stopwatch sw;
    CriterionResult r = criterion("critical_point_oracle",
                      "brute-force argmax of g over [0, r] is s0 when h(r) > 0 and r otherwise (100 pairs)");
    r.threshold = 2e-4;
    auto rng = stream(ctx.seed, 7);
    double worst = 0.0;
    constexpr double step = 1e-4;
    for (int i = 0; i < 100; ++i) {
        const SpiralAlpha alpha = random_alpha(rng);
        const double rad = uniform(rng, 0.01, 0.99);
        double best_s = 0.0, best_g = -1e300;
        auto probe = [&](double s) {
            const double g = g_profile(alpha, rad, s);
            if (g > best_g) {
                best_g = g;
                best_s = s;
            }
        };
        for (double s = 0.0; s < rad; s += step) probe(s);
        probe(rad);
        const double expected = h_poly(alpha, rad) > 0.0 ? s0(alpha, rad) : rad;
        worst = std::max(worst, std::abs(best_s - expected));
    }
    r.measured = worst;
    r.detail = "max |scan argmax - predicted| " + fmt(worst);
    return finish(r, sw, worst <= r.threshold);
}

CriterionResult check_dieudonne(AcceptanceContext& ctx) {
    Stopwatch sw;
    CriterionResult r = criterion("dieudonne_equality",
                      "degree-2 Blaschke: |slack| <= 1e-10 (50 draws); degree 3: slack > 0 (50 draws)");
    r.threshold = 1e-10;
    auto rng = stream(ctx.seed, 8);
    double worst_equal = 0.0;
    double min_strict = 1e300;
    for (int i = 0; i < 50; ++i) {
        const int p = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
        const SchwarzFunction omega = make_blaschke2(p, uniform(rng, -0.99, 0.99));
        const Complex z0 = random_point(rng, 0.01, 0.95);
        worst_equal = std::max(worst_equal, std::abs(dieudonne_report(omega, z0).slack));
    }
    for (int i = 0; i < 50; ++i) {
        const SchwarzFunction omega = make_blaschke_fix0(
            uniform(rng, 0.0, 2.0 * kPi), {random_point(rng, 0.0, 0.9), random_point(rng, 0.0, 0.9)});
        const Complex z0 = random_point(rng, 0.05, 0.9);
        min_strict = std::min(min_strict, dieudonne_report(omega, z0).slack);
    }
    r.measured = worst_equal;
    r.detail = "max |slack| (degree 2) " + fmt(worst_equal) + ", min slack (degree 3) " + fmt(min_strict);
    return finish(r, sw, worst_equal <= r.threshold && min_strict > 0.0);
}

CriterionResult check_series_consistency(AcceptanceContext& ctx) {
    Stopwatch sw;
    CriterionResult r = criterion("series_closed_form_consistency",
                      "series-path Schwarzian (N=128) matches the closed form within 1e-8 on |z| <= 0.7");
    r.threshold = 1e-8;
    r.time_limit = 10.0;
    auto rng = stream(ctx.seed, 9);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const SpiralAlpha alpha = random_alpha(rng);
        const RobertsonFunction f = robertson_from_omega(alpha, random_schwarz_function(rng, 3), kDefaultOrder);
        const DiskFunction series = f.series_function();
        for (int k = 0; k < 100; ++k) {
            const Complex z = random_point(rng, 0.0, 0.7);
            worst = std::max(worst, std::abs(schwarzian(series, z) - f.schwarzian(z)));
        }
        ctx.constructed.push_back(f);
    }
    r.measured = worst;
    r.detail = "max |series - closed form| " + fmt(worst);
    return finish(r, sw, worst <= r.threshold);
}

CriterionResult check_membership(AcceptanceContext& ctx) {
    Stopwatch sw;
    CriterionResult r = criterion("membership", "every constructed Robertson function has membership_min > -1e-9");
    r.threshold = kMembershipTol;
    double worst = 1e300;
    for (const auto& f : ctx.constructed) worst = std::min(worst, membership_min(f, ctx.grid));
    r.measured = worst;
    r.detail = std::to_string(ctx.constructed.size()) + " functions, min " + fmt(worst);
    return finish(r, sw, !ctx.constructed.empty() && worst > kMembershipTol);
}

std::vector<CriterionResult> run_acceptance(AcceptanceContext& ctx) {
    ctx.constructed.clear();
    return {check_convex_sharpness(ctx),  check_large_alpha_norm(ctx),     check_small_alpha_norm(ctx),
            check_pre_schwarzian_norm(ctx), check_pointwise_domination(ctx), check_branch_continuity(ctx),
            check_critical_point(ctx),    check_dieudonne(ctx),            check_series_consistency(ctx),
            check_membership(ctx)};
}

std::uint64_t seed_from_environment() {
    const char* s = std::getenv("SCHWARZIAN_LAB_SEED");
    if (!s || !*s) return 0;
    return std::strtoull(s, nullptr, 10);
}

}  // namespace schwarzian_lab
