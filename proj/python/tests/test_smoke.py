import cmath
import json
import math

import pytest

import schwarzian_lab as sl


def test_bounds():
    assert sl.schwarzian_norm_bound(0.0) == 2.0
    assert sl.pre_schwarzian_norm_bound(0.0) == 4.0
    assert sl.schwarzian_norm_bound(math.pi / 4) == pytest.approx(4.0, rel=1e-14)
    assert sl.delta(math.pi / 4) == pytest.approx(math.sqrt(2) - 1, rel=1e-14)
    assert sl.delta(0.2) is None
    assert sl.pointwise_bound(0.0, 0.5) == pytest.approx(2 / 0.5625)


def test_series_arithmetic():
    g = sl.TaylorSeries.geometric(8)
    one_minus_z = sl.TaylorSeries([1, -1] + [0] * 7)
    product = g * one_minus_z
    assert product.coeffs[0] == 1
    assert all(abs(c) < 1e-15 for c in product.coeffs[1:])
    assert abs(sl.series_exp(sl.TaylorSeries([0, 1] + [0] * 20))(0.5) - math.exp(0.5)) < 1e-14


def test_extremals():
    assert sl.extremal_b(0.0, 0.5) == pytest.approx(0.8)
    f = sl.extremal_fz0p(0.0, 0.5, 32)
    assert f.omega(0.5) == pytest.approx(0.25)
    assert abs(f.schwarzian(0.5)) == pytest.approx(sl.extremal_value(0.0, 0.5))
    g = sl.extremal_attaining(0.3, 0.5, 32)
    assert abs(g.schwarzian(0.5)) == pytest.approx(sl.extremal_value(0.3, 0.5), rel=1e-12)
    with pytest.raises(sl.DomainError):
        sl.extremal_b(math.pi / 3, 0.5)


def test_robertson_function():
    w = sl.make_blaschke_fix0(0.4, [0.3 + 0.2j])
    f = sl.robertson_from_omega(sl.SpiralAlpha(0.7), w)
    assert f.f_series.coeffs[1] == pytest.approx(1.0)
    z = 0.2 - 0.3j
    assert abs(f.series_schwarzian(z) - f.schwarzian(z)) < 1e-8
    assert sl.membership_min(f) > -1e-9
    assert abs(f.schwarzian(z)) <= sl.pointwise_bound(0.7, abs(z)) + 1e-9


def test_norms():
    grid = sl.GridConfig()
    grid.n_radii, grid.n_angles = 32, 64
    result = sl.norm_schwarzian(sl.extremal_f0(math.pi / 3, 16), grid)
    assert result.value >= 0.99 * 2 * math.sqrt(3)
    assert result.boundary_attained
    assert abs(cmath.phase(result.argmax)) < 1e-3


def test_commands():
    assert sl.parse_spec(" f0( alpha = pi/3 ) ") == "f0(alpha=pi/3)"
    with pytest.raises(sl.ParseError):
        sl.parse_spec("f0(alpha=")
    report = json.loads(sl.cmd_bound(0.0))
    assert report["results"]["S_norm_bound"] == 2
    assert report["results"]["delta"] is None
    csv = sl.cmd_sweep(-1.0, 1.0, 3)
    assert csv.splitlines()[0].startswith("alpha,regime")
    assert len(csv.splitlines()) == 4


def test_verify():
    report = json.loads(sl.verify(0))
    assert report["results"]["all_passed"] is True
