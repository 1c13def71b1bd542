#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "schwarzian_lab/disk_functions.hpp"
#include "schwarzian_lab/errors.hpp"
#include "schwarzian_lab/robertson.hpp"

using namespace schwarzian_lab;
using std::numbers::pi;

namespace {

// Winding number of f around 0 along |z| = r.
int winding(const SchwarzFunction& f, double r) {
    constexpr int n = 4000;
    double total = 0.0;
    Complex prev = f(Complex(r, 0.0));
    for (int k = 1; k <= n; ++k) {
        const Complex cur = f(std::polar(r, 2.0 * pi * k / n));
        total += std::arg(cur / prev);
        prev = cur;
    }
    return static_cast<int>(std::lround(total / (2.0 * pi)));
}

void check_jet_by_finite_differences(const DiskFunction& f, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> rad(0.0, 0.9), ang(0.0, 2.0 * pi);
    constexpr double h = 1e-5;
    for (int k = 0; k < 40; ++k) {
        const Complex z = std::polar(rad(rng), ang(rng));
        if (std::abs(z) + h >= 0.9) continue;
        const Jet j = f.jet(z);
        const Complex d1 = oracle::central_diff([&](Complex w) { return f.jet(w).value; }, z, h);
        const Complex d2 = oracle::central_diff([&](Complex w) { return f.jet(w).d1; }, z, h);
        const Complex d3 = oracle::central_diff([&](Complex w) { return f.jet(w).d2; }, z, h);
        CHECK(std::abs(d1 - j.d1) / std::max(1.0, std::abs(j.d1)) <= 1e-6);
        CHECK(std::abs(d2 - j.d2) / std::max(1.0, std::abs(j.d2)) <= 1e-6);
        CHECK(std::abs(d3 - j.d3) / std::max(1.0, std::abs(j.d3)) <= 1e-6);
    }
}

}  // namespace

TEST_CASE("make_rotation") {
    CHECK(make_rotation(0.0)(0.5) == Complex(0.5));
    CHECK(std::abs(make_rotation(pi)(0.5) + 0.5) < 1e-16);

    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 2.0 * pi), r(0.0, 0.99);
    for (int k = 0; k < 50; ++k) {
        const SchwarzFunction w = make_rotation(u(rng));
        const Complex z = std::polar(r(rng), u(rng));
        CHECK(std::abs(std::abs(w(z)) - std::abs(z)) < 1e-15);
        CHECK(std::abs(w.quotient(z)) == doctest::Approx(1.0));
    }
}

TEST_CASE("make_blaschke2") {
    const SchwarzFunction minus_z2 = make_blaschke2(-1, 0.0);
    CHECK(minus_z2(0.5) == Complex(-0.25));

    const SchwarzFunction zero_at_b = make_blaschke2(1, 0.5);
    CHECK(std::abs(zero_at_b(0.5)) < 1e-16);
    CHECK(std::abs(zero_at_b.quotient(0.5)) < 1e-16);

    // unimodular on the circle: on |z| = 0.999 the modulus stays within 0.998..1
    const SchwarzFunction phi = make_blaschke2(-1, 0.8);
    for (int k = 0; k < 64; ++k) {
        const double m = std::abs(phi(std::polar(0.999, 2.0 * pi * k / 64)));
        CHECK(m < 1.0);
        CHECK(m > 0.99);
    }

    CHECK_THROWS_AS(make_blaschke2(2, 0.1), BadParameter);
    CHECK_THROWS_AS(make_blaschke2(0, 0.1), BadParameter);
    CHECK_THROWS_AS(make_blaschke2(1, 1.0), BadParameter);
    CHECK_THROWS_AS(make_blaschke2(-1, -1.5), BadParameter);
    CHECK_THROWS_AS(make_blaschke_fix0(0.0, {Complex(0.6, 0.8)}), BadParameter);
}

TEST_CASE("jet") {
    const Jet id = make_identity().jet(Complex(0.2, -0.3));
    CHECK(id.value == Complex(0.2, -0.3));
    CHECK(id.d1 == Complex(1.0));
    CHECK(id.d2 == Complex(0.0));
    CHECK(id.d3 == Complex(0.0));

    // d/dz of -z^2 at 0.5
    const Jet b = make_blaschke2(-1, 0.0).jet(0.5);
    CHECK(std::abs(b.value + 0.25) < 1e-16);
    CHECK(std::abs(b.d1 + 1.0) < 1e-16);
    CHECK(std::abs(b.d2 + 2.0) < 1e-16);
    CHECK(std::abs(b.d3) < 1e-16);

    const DiskFunction geo = make_series_function(TaylorSeries::geometric(kDefaultOrder));
    CHECK(geo.kind() == FunctionKind::SeriesBacked);
    const Jet g = geo.jet(0.3);
    CHECK(std::abs(g.value - 1.0 / 0.7) < 1e-13);
    CHECK(std::abs(g.d1 - 1.0 / std::pow(0.7, 2)) < 1e-13);
    CHECK(std::abs(g.d2 - 2.0 / std::pow(0.7, 3)) < 1e-12);
    CHECK(std::abs(g.d3 - 6.0 / std::pow(0.7, 4)) < 1e-11);

    CHECK_THROWS_AS(make_identity().jet(1.0), OutsideDisk);
    CHECK_THROWS_AS(make_rotation(0.3).jet(Complex(0.8, 0.8)), OutsideDisk);
}

TEST_CASE("property: closed-form jets agree with finite differences") {
    std::mt19937_64 rng(99);
    check_jet_by_finite_differences(make_rotation(0.7).as_disk_function(), rng);
    check_jet_by_finite_differences(make_blaschke2(-1, 0.6).as_disk_function(), rng);
    check_jet_by_finite_differences(make_blaschke2(1, -0.3).as_disk_function(), rng);
    check_jet_by_finite_differences(
        make_blaschke_fix0(1.1, {Complex(0.3, 0.4), Complex(-0.5, 0.1)}).as_disk_function(), rng);
    check_jet_by_finite_differences(make_mobius(1.0, 0.0, -1.0, 1.0), rng);
    check_jet_by_finite_differences(f0_closed_form(SpiralAlpha(0.9)), rng);
    check_jet_by_finite_differences(f0_closed_form(SpiralAlpha(-0.4)), rng);
}

TEST_CASE("property: quotient is omega/z and q(0) = omega'(0)") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 2.0 * pi), r(0.01, 0.99), zr(0.0, 0.9);
    for (int k = 0; k < 100; ++k) {
        const SchwarzFunction w =
            k % 3 == 0 ? make_rotation(u(rng))
            : k % 3 == 1 ? make_blaschke2(k % 2 ? 1 : -1, zr(rng) - 0.45)
                         : make_blaschke_fix0(u(rng), {std::polar(zr(rng), u(rng)), std::polar(zr(rng), u(rng))});
        const Complex z = std::polar(r(rng), u(rng));
        CHECK(z * w.quotient(z) == w(z));
        CHECK(w.quotient(0.0) == w.jet(0.0).d1);
        CHECK(w(0.0) == Complex(0.0));
        CHECK(std::abs(w(z)) <= std::abs(z) + 1e-15);
    }
}

TEST_CASE("blaschke2 has exactly the zeros 0 and b in the disk") {
    for (double b : {-0.9, -0.4, 0.0, 0.3, 0.85}) {
        for (int p : {-1, 1}) {
            const SchwarzFunction w = make_blaschke2(p, b);
            CHECK(winding(w, 0.95) == 2);
            CHECK(std::abs(w(b)) < 1e-15);
        }
    }
    // the rotation has the single zero 0; a degree-3 product has three
    CHECK(winding(make_rotation(0.2), 0.95) == 1);
    CHECK(winding(make_blaschke_fix0(0.0, {Complex(0.3, 0.0), Complex(0.0, -0.5)}), 0.95) == 3);
}

TEST_CASE("series of a Schwarz function matches its closed form") {
    const SchwarzFunction w = make_blaschke_fix0(0.4, {Complex(0.5, -0.2), Complex(-0.3, 0.6)});
    const TaylorSeries s = w.series(kDefaultOrder);
    CHECK(s[0] == Complex(0.0));
    for (double r : {0.2, 0.5, 0.7}) {
        const Complex z = std::polar(r, 1.3);
        CHECK(std::abs(s.eval(z) - w(z)) < 1e-13);
        CHECK(std::abs(w.quotient_series().eval(z) - w.quotient(z)) < 1e-13);
    }
}

TEST_CASE("schwarz_certify") {
    const CertReport rot = schwarz_certify(make_rotation(1.3));
    CHECK(rot.points == 64 * 256);
    CHECK(rot.value_at_origin == 0.0);
    CHECK(rot.max_modulus_excess <= 1e-15);
    CHECK(rot.max_schwarz_pick_defect <= 1e-15);
    CHECK(rot.certified());

    const CertReport b2 = schwarz_certify(make_blaschke2(-1, 0.5));
    CHECK(b2.max_modulus_excess <= 1e-12);
    CHECK(b2.max_schwarz_pick_defect <= 1e-12);
    CHECK(b2.certified());

    const CertReport shifted = schwarz_certify(make_mobius(1.0, 0.5, 0.0, 1.0, "z+0.5"));
    CHECK(shifted.value_at_origin == doctest::Approx(0.5));
    CHECK_FALSE(shifted.certified());
}
