#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "schwarzian_lab/acceptance.hpp"
#include "schwarzian_lab/errors.hpp"
#include "schwarzian_lab/norm_estimator.hpp"

using namespace schwarzian_lab;
using std::numbers::pi;

TEST_CASE("weighted_sup examples") {
    const NormResult zero = weighted_sup([](Complex) { return Complex(0.0); }, 2);
    CHECK(zero.value == 0.0);
    CHECK(zero.evaluations > 0);

    // (1 - r^2) * 2/(1 - r) = 2(1 + r) -> 4 at the boundary
    const NormResult pole = weighted_sup([](Complex z) { return 2.0 / (1.0 - z); }, 1);
    CHECK(pole.value >= 4.0 - 1e-3);
    CHECK(pole.value <= 4.0);
    CHECK(pole.boundary_attained);
    CHECK(std::abs(pole.argmax.imag()) < 1e-6);

    const SpiralAlpha a(pi / 3);
    const NormResult f0 = weighted_sup([&](Complex z) { return f0_schwarzian(a, z); }, 2);
    CHECK(f0.value >= 2.0 * std::sqrt(3.0) * 0.999);
    CHECK(f0.boundary_attained);

    // interior maximum: (1 - r^2) r peaks at r = 1/sqrt(3)
    const NormResult interior = weighted_sup([](Complex z) { return z; }, 1);
    CHECK(interior.value == doctest::Approx(2.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-10));
    CHECK(std::abs(std::abs(interior.argmax) - 1.0 / std::sqrt(3.0)) < 1e-5);
    CHECK_FALSE(interior.boundary_attained);
}

TEST_CASE("weighted_sup errors") {
    CHECK_THROWS_AS(weighted_sup([](Complex) { return Complex(1.0); }, 3), DomainError);
    CHECK_THROWS_AS(weighted_sup([](Complex) { return Complex(1.0); }, 0), DomainError);
    CHECK_THROWS_AS(weighted_sup([](Complex) -> Complex { throw std::runtime_error("boom"); }, 1), EvaluationFailure);
    GridConfig bad;
    bad.n_radii = 1;
    CHECK_THROWS_AS(weighted_sup([](Complex) { return Complex(1.0); }, 1, bad), DomainError);
}

TEST_CASE("norm_pre_schwarzian") {
    CHECK(norm_pre_schwarzian(make_identity()).value == 0.0);
    const NormResult koebe_half = norm_pre_schwarzian(extremal_f0(SpiralAlpha(0.0)));
    CHECK(koebe_half.value == doctest::Approx(4.0).epsilon(1e-3));
    for (double a : {pi / 4, -1.2, 0.3}) {
        const SpiralAlpha alpha(a);
        CHECK(norm_pre_schwarzian(extremal_f0(alpha)).value ==
              doctest::Approx(pre_schwarzian_norm_bound(alpha)).epsilon(1e-3));
    }
}

TEST_CASE("norm_schwarzian") {
    CHECK(norm_schwarzian(make_mobius(1.0, 0.0, -1.0, 1.0)).value < 1e-12);
    const SpiralAlpha a(pi / 3);
    const NormResult f0 = norm_schwarzian(extremal_f0(a));
    CHECK(f0.value >= 0.99 * schwarzian_norm_bound(a));
    CHECK(f0.value <= schwarzian_norm_bound(a) + 1e-9);

    const NormResult conv = norm_schwarzian(extremal_fz0p(SpiralAlpha(0.0), 0.5));
    CHECK(conv.value >= 2.0);
    CHECK(conv.value <= 2.0 + 1e-3);
}

TEST_CASE("series-backed functions are scanned to 0.9 and flagged") {
    const SpiralAlpha a(0.4);
    // f0 has a boundary singularity at 1; order 256 keeps the third derivative accurate at 0.9
    const DiskFunction f = extremal_f0(a, 256).series_function();
    const NormResult r = norm_schwarzian(f);
    CHECK(r.truncation_limited);
    CHECK(std::abs(r.argmax) <= kSeriesRadiusCap + 1e-12);
    CHECK_FALSE(norm_schwarzian(extremal_f0(a)).truncation_limited);
    // agrees with the closed form on the capped disk
    GridConfig capped;
    capped.r_max = kSeriesRadiusCap;
    CHECK(r.value == doctest::Approx(norm_schwarzian(extremal_f0(a), capped).value).epsilon(1e-4));
}

TEST_CASE("property: refinement is monotone") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 10; ++k) {
        const SpiralAlpha a(std::uniform_real_distribution<double>(-1.5, 1.5)(rng));
        const RobertsonFunction f = robertson_from_omega(a, random_schwarz_function(rng), 8);
        double prev = -1.0;
        for (std::size_t iters : {0u, 5u, 10u, 20u, 40u}) {
            GridConfig cfg;
            cfg.n_radii = 16;
            cfg.n_angles = 32;
            cfg.refine_iters = iters;
            const double v = norm_schwarzian(f, cfg).value;
            CHECK(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("property: rotation equivariance") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-0.9, 0.9);
    GridConfig cfg;
    cfg.n_angles = 512;
    for (int k = 0; k < 5; ++k) {
        const Complex a(u(rng) * 0.5, u(rng) * 0.5), c(u(rng), u(rng));
        const double theta = 2.0 * pi * std::uniform_real_distribution<double>(0, 1)(rng);
        const Complex rot = std::polar(1.0, theta);
        const PointwiseMap F = [&](Complex z) { return a * z * z + 1.0 / (1.0 - c * z); };
        const PointwiseMap G = [&](Complex z) { return F(rot * z); };
        const double vf = weighted_sup(F, 2, cfg).value;
        const double vg = weighted_sup(G, 2, cfg).value;
        CHECK(std::abs(vf - vg) <= 1e-3 * vf);
    }
}

TEST_CASE("property: the estimate is a sound lower bound") {
    std::mt19937_64 rng(9);
    GridConfig cfg;
    cfg.n_radii = 24;
    cfg.n_angles = 64;
    for (int k = 0; k < 6; ++k) {
        const SpiralAlpha a(std::uniform_real_distribution<double>(-1.5, 1.5)(rng));
        const RobertsonFunction f = robertson_from_omega(a, random_schwarz_function(rng), 8);
        const NormResult r = norm_schwarzian(f, cfg);
        CHECK(r.value <= schwarzian_norm_bound(a) + 1e-9);
        // the estimate is attained at argmax
        const double w = 1.0 - std::norm(r.argmax);
        CHECK(r.value == doctest::Approx(w * w * std::abs(f.schwarzian(r.argmax))).epsilon(1e-12));
        const double brute =
            oracle::brute_force_sup([&](Complex z) { return f.schwarzian(z); }, 2, cfg.r_max, 24, 64);
        CHECK(r.value >= brute * (1.0 - 1e-3));
    }
}
