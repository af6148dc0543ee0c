import cmath
import math

import numpy as np
import pytest
from scipy.integrate import quad

from solitonforge.backlund import (AutoBTConfig, BTPair, Prop6Params, Prop8Params, auto_bt_residuals,
                                   bt_integrate, bt_residual_grid, bt_spec, bt_residuals,
                                   compare_with_integrator, example9_seed, example10_seed,
                                   fd_pde_residual_grid, path_consistency, prop6_reports,
                                   prop6_solution, prop8_reports, prop8_solution,
                                   theta_pde_residual)
from solitonforge.core import EquationSpec, Jet2, UnitParam, jet_solution, jsin, zero_solution
from solitonforge.errors import ConstraintViolated
from solitonforge.hirota import WaveParams, one_soliton
from solitonforge.separation import Function1D
from solitonforge.verify import grid_scan

REPORT_KEYS = {"region", "max_closedform_vs_integrator", "max_bt_residual", "max_pde_residual",
               "verdict", "notes"}


def test_bt_residual_examples():
    z = zero_solution()
    r = bt_residuals(BTPair(z, z, EquationSpec(1, 1, 0, 0)), 0.3, 0.1)
    assert r == (0, 0)
    w = one_soliton(WaveParams(2, 0), 1, "i")
    r1, r2 = bt_residuals(BTPair(w, z, EquationSpec(1, 1, 1, 0)), 0.3, 0.1)
    assert max(abs(r1), abs(r2)) > 0.1


def test_theta_residual_examples():
    z = zero_solution()
    assert theta_pde_residual(z, EquationSpec(1, 1, 1, 0), 0.2, 0.2) == 0
    assert theta_pde_residual(z, EquationSpec(1, 1, 1, 1), 0.2, 0.2) == pytest.approx(-4)


def test_auto_bt_examples():
    z = zero_solution()
    assert auto_bt_residuals(z, z, 1, 0.1, 0.2) == (0, 0)
    f = jet_solution(lambda x, y: jsin(x + y * 0.5), "probe")
    x, y = 0.4, -0.3
    r1, _ = auto_bt_residuals(f, f, 1, x, y)
    v = math.sin(x + 0.5 * y)
    fx, fy = math.cos(x + 0.5 * y), 0.5 * math.cos(x + 0.5 * y)
    assert r1 == pytest.approx((fx - fy) - 2 * math.sinh(v) * math.cosh(v))
    assert abs(r1) > 1e-3


@pytest.mark.parametrize("delta", [1, "i"])
def test_integrator_zero_seed(delta):
    f00 = 0.3
    d = UnitParam.parse(delta).z
    cfg = AutoBTConfig(delta, zero_solution(), f00)
    grid = bt_integrate(cfg, (-1, 0.5, -0.5, 0.5), 91, 11)
    c0 = cmath.tanh(d * f00 / 2)
    for ix, x in enumerate(grid.xs):
        exact = 2 / d * cmath.atanh(c0 * cmath.exp(2 * x))
        assert np.max(np.abs(grid.f[:, ix] - exact)) <= 1e-9
    assert np.max(bt_residual_grid(grid, zero_solution())) <= 1e-6
    assert np.nanmax(fd_pde_residual_grid(grid)) <= 1e-5


def test_integrator_zero_fixed_point():
    grid = bt_integrate(AutoBTConfig(1, zero_solution(), 0.0), (-1, 1, -1, 1), 5, 5)
    assert np.all(grid.f == 0)


def test_integrator_region_must_contain_origin():
    with pytest.raises(ValueError):
        bt_integrate(AutoBTConfig(1, zero_solution(), 0.0), (0.5, 1, -1, 1), 5, 5)


def test_example10_seed_properties():
    g = example10_seed()
    assert abs(g.value(0, 0)) <= 1e-15
    for x, y in [(0.3, 0.7), (-0.5, 0.2)]:
        v = g.value(x, y)
        assert g.value(-x, y) == pytest.approx(v, abs=1e-14)
        assert g.value(x, -y) == pytest.approx(v, abs=1e-14)
    rep = grid_scan(g, g.spec, (-1, 1, -1, 1), 21, 21, margin=0.1)
    assert rep.max_abs <= 1e-8
    assert g.spec.K == pytest.approx(1.0)
    # the seed also solves the transformation's source equation
    assert grid_scan(g, bt_spec("i"), (-1, 1, -1, 1), 11, 11).max_abs <= 1e-8


def test_integrator_example10_seed():
    g = example10_seed()
    cfg = AutoBTConfig("i", g, 0.0)
    grid = bt_integrate(cfg, (-0.5, 0.5, -0.5, 0.5), 41, 41)
    assert np.max(bt_residual_grid(grid, g)) <= 1e-6
    assert np.nanmax(fd_pde_residual_grid(grid)) <= 1e-5
    assert path_consistency(cfg, (-0.5, 0.5, -0.5, 0.5), 11, 11) <= 1e-5


def test_integrator_threads_deterministic():
    g = example10_seed()
    cfg = AutoBTConfig("i", g, 0.0)
    a = bt_integrate(cfg, (-0.5, 0.5, -0.5, 0.5), 9, 9, threads=1)
    b = bt_integrate(cfg, (-0.5, 0.5, -0.5, 0.5), 9, 9, threads=4)
    assert np.array_equal(a.f, b.f)


def test_prop6_params_check():
    with pytest.raises(ConstraintViolated):
        Prop6Params(Function1D.sinh_over(1.0), Function1D.cos_of(1.0).__class__.constant(2.0), 0.1)


def test_prop6_y0_leg():
    delta = "i"
    d = 1j
    g, F, G = example9_seed(delta)
    p = Prop6Params.from_f00(F, G, 0.5, delta)
    for form in ("corrected", "statement", "proof"):
        sol = prop6_solution(p, delta, form)
        for x in (0.3, 0.6):
            d2 = 1 if form != "corrected" else -1
            X = quad(lambda t: (1 + d2 * (math.sinh(math.sqrt(5) * t) / math.sqrt(5)) ** 2)
                     / (1 - d2 * (math.sinh(math.sqrt(5) * t) / math.sqrt(5)) ** 2), 0, x,
                     epsabs=1e-13, epsrel=1e-13)[0]
            assert sol.potential(x, 0.0) == pytest.approx(p.c0 * cmath.exp(2 * X), rel=1e-9)
    assert abs(cmath.tanh(d * g.value(0.3, 0.0) / 2) - d * F(0.3)) <= 1e-12


def test_prop6_c0_zero():
    delta = "i"
    _, F, G = example9_seed(delta)
    p = Prop6Params(F, G, 0.0)
    sol = prop6_solution(p, delta, "statement")
    x, y = 0.6, 0.4
    k = math.sqrt(5)
    lam = F.eval(x)[1] / F(x)
    Lam = cmath.sqrt(4 - lam * lam)
    Y = quad(lambda s: (2 * F(x) / math.cosh(s) / (1 + (F(x) / math.cosh(s)) ** 2)).real, 0, y,
             epsabs=1e-13)[0]
    assert sol.potential(x, y) == pytest.approx((2 + lam) * cmath.tanh(Lam * Y) / Lam, rel=1e-9)
    assert lam == pytest.approx(k / math.tanh(k * x))


def test_prop6_corrected_matches_integrator():
    delta = "i"
    g, F, G = example9_seed(delta)
    cfg = AutoBTConfig(delta, g, 0.5)
    grid = bt_integrate(cfg, (-0.6, 0.6, -0.6, 0.6), 13, 13)
    sol = prop6_solution(Prop6Params.from_f00(F, G, 0.5, delta), delta)
    rep = compare_with_integrator(sol, grid, g, lambda x, y: abs(x) < 0.1, label="t")
    assert set(rep) == REPORT_KEYS
    assert rep["verdict"] == "agree"
    assert rep["max_closedform_vs_integrator"] <= 1e-5


def test_prop8_params_check():
    with pytest.raises(ConstraintViolated):
        Prop8Params(Function1D.linear(1.0), Function1D.linear(1.0))


def test_prop8_x0_leg():
    g = example10_seed()
    p = Prop8Params(g.params["A"], g.params["B"])
    assert p.A0 == 0
    r2 = math.sqrt(2)
    for form in ("corrected", "statement", "proof"):
        sol = prop8_solution(p, "i", form)
        for y in (0.3, -0.7):
            Yh = quad(lambda s: (cmath.tan(1j * -math.log(math.cosh(r2 * s)))).imag, 0, y,
                      epsabs=1e-13)[0] * 1j
            expect = {"corrected": cmath.tan(Yh), "statement": cmath.tan(1j * Yh),
                      "proof": cmath.tan(1j * Yh) / 1j}[form]
            assert sol.potential(0.0, y) == pytest.approx(expect, rel=1e-9, abs=1e-12)
    # f(0, 0) = 0 on the leg's limit
    sol = prop8_solution(p, "i")
    assert abs(sol.potential(0.0, 1e-4)) < 1e-3


def test_report_functions():
    r6 = prop6_reports(nx=21, ny=21)
    r8 = prop8_reports(nx=19, ny=21)
    for reps in (r6, r8):
        assert len(reps) == 4
        for r in reps:
            assert set(r) == REPORT_KEYS
            assert r["verdict"] in ("agree", "disagree")
            if r["verdict"] == "disagree":
                assert r["max_closedform_vs_integrator"] is None or r["max_closedform_vs_integrator"] > 1e-5
        assert reps[0]["verdict"] == "agree"
        assert reps[0]["max_bt_residual"] <= 1e-6
    assert all(r["verdict"] == "disagree" for r in r6[1:])
    assert all(r["verdict"] == "disagree" for r in r8[1:])
