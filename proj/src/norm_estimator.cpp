#include "schwarzian_lab/norm_estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "schwarzian_lab/errors.hpp"

namespace schwarzian_lab {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2

class Scanner {
public:
    Scanner(const PointwiseMap& F, int k) : F_(F), k_(k) {}

    double eval(double r, double theta) {
        const Complex z = std::polar(r, theta);
        Complex v;
        try {
            v = F_(z);
        } catch (const std::exception& e) {
            std::ostringstream os;
            os.precision(17);
            os << "weighted_sup: evaluation failed at z = " << z << ": " << e.what();
            throw EvaluationFailure(os.str());
        }
        ++result.evaluations;
        const double w = 1.0 - r * r;
        const double m = (k_ == 1 ? w : w * w) * std::abs(v);
        if (m > result.value || result.evaluations == 1) {
            result.value = m;
            result.argmax = z;
            best_r = r;
            best_theta = theta;
        }
        return m;
    }

    // Golden-section maximization of t -> eval(point(t)) over [lo, hi].
    template <class Point>
    void golden(double lo, double hi, std::size_t iters, double tol, Point point) {
        double a = lo, b = hi;
        double c = b - kInvPhi * (b - a);
        double d = a + kInvPhi * (b - a);
        double fc = eval_at(point, c);
        double fd = eval_at(point, d);
        for (std::size_t it = 0; it < iters && (b - a) > tol; ++it) {
            if (fc >= fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - kInvPhi * (b - a);
                fc = eval_at(point, c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + kInvPhi * (b - a);
                fd = eval_at(point, d);
            }
        }
    }

    NormResult result;
    double best_r = 0.0;
    double best_theta = 0.0;

private:
    template <class Point>
    double eval_at(Point& point, double t) {
        const auto [r, theta] = point(t);
        return eval(r, theta);
    }

    const PointwiseMap& F_;
    int k_;
};

NormResult capped_sup(const PointwiseMap& F, int k, GridConfig cfg, bool series_backed) {
    bool capped = false;
    if (series_backed && cfg.r_max > kSeriesRadiusCap) {
        cfg.r_max = kSeriesRadiusCap;
        capped = true;
    }
    NormResult res = weighted_sup(F, k, cfg);
    res.truncation_limited = capped;
    return res;
}

}  // namespace

NormResult weighted_sup(const PointwiseMap& F, int weight_power, const GridConfig& cfg) {
    if (weight_power != 1 && weight_power != 2) throw DomainError("weighted_sup: weight power must be 1 or 2");
    cfg.validate();

    const auto radii = cfg.radii();
    const auto angles = cfg.angles();
    Scanner scan(F, weight_power);

    std::size_t best_i = 0, best_j = 0;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        for (std::size_t j = 0; j < angles.size(); ++j) {
            const double before = scan.result.value;
            const std::size_t n_before = scan.result.evaluations;
            scan.eval(radii[i], angles[j]);
            if (scan.result.value > before || n_before == 0) {
                best_i = i;
                best_j = j;
            }
        }
    }

    // Both line searches are anchored at the coarse maximizer and are independent
    // of each other, so a larger refine_iters only extends each probe sequence.
    const double r_star = radii[best_i];
    const double t_star = angles[best_j];
    const double r_lo = radii[best_i == 0 ? 0 : best_i - 1];
    const double r_hi = radii[std::min(best_i + 1, radii.size() - 1)];
    const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(angles.size());

    if (cfg.refine_iters > 0) {
        scan.golden(r_lo, r_hi, cfg.refine_iters, cfg.refine_tol,
                    [&](double r) { return std::pair{r, t_star}; });
        if (r_star > 0.0)
            scan.golden(t_star - dtheta, t_star + dtheta, cfg.refine_iters, cfg.refine_tol,
                        [&](double t) { return std::pair{r_star, t}; });
    }

    NormResult res = scan.result;
    res.boundary_attained = scan.best_r >= radii[radii.size() - 2];
    return res;
}

NormResult norm_pre_schwarzian(const DiskFunction& f, const GridConfig& cfg) {
    return capped_sup([&](Complex z) { return pre_schwarzian(f, z); }, 1, cfg,
                      f.kind() == FunctionKind::SeriesBacked);
}

NormResult norm_schwarzian(const DiskFunction& f, const GridConfig& cfg) {
    return capped_sup([&](Complex z) { return schwarzian(f, z); }, 2, cfg, f.kind() == FunctionKind::SeriesBacked);
}

NormResult norm_pre_schwarzian(const RobertsonFunction& f, const GridConfig& cfg) {
    return weighted_sup([&](Complex z) { return f.pre_schwarzian(z); }, 1, cfg);
}

NormResult norm_schwarzian(const RobertsonFunction& f, const GridConfig& cfg) {
    return weighted_sup([&](Complex z) { return f.schwarzian(z); }, 2, cfg);
}

}  // namespace schwarzian_lab
