import math

import numpy as np
import pytest

from solitonforge.errors import (ConstraintViolated, DegenerateDenominator, DispersionViolated,
                                 VerificationFailure)
from solitonforge.expsum import ExpPoly
from solitonforge.hirota import (CascadeSeries, SolitonSpec, WaveParams, bilinear_residuals,
                                 cascade_example1, cascade_example2, cascade_example3,
                                 cascade_residuals, dispersion_residual, example3_waves, fg_of,
                                 fg_solution, interaction_coefficient, n_soliton_candidate,
                                 one_soliton, soliton_series, special_coefficient,
                                 special_two_soliton, special_wave, three_soliton, two_soliton,
                                 wave_from_angle)
from solitonforge.verify import grid_scan

R5 = math.sqrt(5.0)
REGION = (-3, 3, -3, 3)


def scan(sol):
    return grid_scan(sol, sol.spec, REGION, 21, 21, margin=0.1)


def test_dispersion_examples():
    assert dispersion_residual(WaveParams(2, 0), 1) == 0
    assert abs(dispersion_residual(WaveParams(R5, 1), 1)) < 1e-15
    assert dispersion_residual(WaveParams(2, 1), 1) == -1
    assert dispersion_residual(WaveParams(2, 1), "i") == 1
    for t in np.linspace(-2, 2, 9):
        for d in (1, "i"):
            assert abs(dispersion_residual(wave_from_angle(t, d), d)) < 1e-12


def test_interaction_examples():
    w = WaveParams(R5, 1)
    assert interaction_coefficient(w, w, 1, 1) == 0
    w1, w2 = WaveParams(2, 0), WaveParams(R5, 1)
    a = interaction_coefficient(w1, w2, 1, 1)
    b = interaction_coefficient(w1, w2, 1, 1, form="alternate")
    assert abs(a - b) <= 1e-12
    assert interaction_coefficient(w1, w2, 1, "i") == pytest.approx(-a)
    with pytest.raises(DegenerateDenominator):
        interaction_coefficient(WaveParams(2, 0), WaveParams(-2, 0), 1, 1)
    with pytest.raises(ValueError):
        interaction_coefficient(w1, w2, 1, 1, form="other")


def test_interaction_forms_agree(rng):
    for d in (1, "i"):
        n = 0
        while n < 100:
            w1 = wave_from_angle(rng.uniform(-2, 2), d)
            w2 = wave_from_angle(rng.uniform(-2, 2), d)
            try:
                a = interaction_coefficient(w1, w2, d, "i")
                b = interaction_coefficient(w1, w2, d, "i", form="alternate")
            except DegenerateDenominator:
                continue
            assert abs(a - b) <= 1e-10 * max(1.0, abs(a))
            n += 1


def test_soliton_spec_json():
    s = SolitonSpec(1, "i", [WaveParams(2, 0), WaveParams(R5, 1), WaveParams(R5, -1)])
    assert s.A[0][1] == s.A[1][0]
    assert s.B == pytest.approx(s.A[0][1] * s.A[0][2] * s.A[1][2])
    t = SolitonSpec.from_json(s.to_json())
    assert t.A == s.A
    assert SolitonSpec(1, "i", s.waves, b_rule="sum").B == pytest.approx(s.A[0][1] + s.A[0][2] + s.A[1][2])


def test_one_soliton_examples():
    sol = one_soliton(WaveParams(2, 0), 1, "i")
    for x, y in [(-1.0, 0.3), (0.0, 0.0), (0.7, -2.0)]:
        assert sol.value(x, y) == pytest.approx(2 * math.atan(math.exp(2 * x)), abs=1e-13)
    assert scan(sol).max_abs <= 1e-9
    kink = one_soliton(WaveParams(2, 0), 1, 1)
    assert kink.singular_set(0.0, 0.5)
    assert abs(kink.value(-0.5, 0.0).imag) < 1e-15
    assert grid_scan(kink, kink.spec, (-3, -0.2, -3, 3), 11, 11).max_abs <= 1e-9
    with pytest.raises(DispersionViolated):
        one_soliton(WaveParams(2, 1), 1, 1)


def test_one_soliton_translation():
    g = 0.8
    s0 = one_soliton(WaveParams(2, 0), 1, "i")
    sg = one_soliton(WaveParams(2, 0, g), 1, "i")
    for x in np.linspace(-2, 2, 7):
        assert sg.value(x, 0.4) == pytest.approx(s0.value(x + g / 2, 0.4), abs=1e-13)


def test_broken_dispersion_has_residual():
    sol = fg_solution(WaveParams(2, 1).exp(), ExpPoly.const(1), 1, "i", "broken")
    assert scan(sol).max_abs > 1e-3


def test_two_soliton():
    w1, w2 = WaveParams(2, 0), WaveParams(R5, 1)
    sol = two_soliton(w1, w2, 1, "i")
    assert scan(sol).max_abs <= 1e-8
    r1, r2 = bilinear_residuals(*fg_of(sol), 1, "i")
    assert r1.is_zero(1e-12) and r2.is_zero(1e-12)
    # identical waves: A = 0, a gamma-shifted one-soliton
    same = two_soliton(w1, w1, 1, "i")
    assert same.params["A"] == 0
    shifted = one_soliton(WaveParams(2, 0, math.log(2)), 1, "i")
    assert same.value(-0.3, 1.0) == pytest.approx(shifted.value(-0.3, 1.0), abs=1e-13)


def test_special_two_soliton():
    with pytest.raises(ConstraintViolated):
        special_wave(0.0, 1)
    w = special_wave(1.0, "i")
    assert w.alpha == pytest.approx(math.sqrt(2)) and w.beta == pytest.approx(math.sqrt(2))
    # with the exact G_2 coefficient: kappa^2 (1 - delta^2 c^2) / 16 = kappa^2 / 8
    assert special_coefficient(1.0, "i", 1) == pytest.approx(1 / 8)
    assert special_coefficient(1.0, "i", "i") == pytest.approx(-1 / 8)
    for kappa in (1, "i"):
        sol = special_two_soliton(1.0, w, "i", kappa)
        r1, r2 = bilinear_residuals(*fg_of(sol), "i", kappa)
        assert r1.is_zero(1e-12) and r2.is_zero(1e-12)
        bad = special_two_soliton(1.0, w, "i", kappa, rule="printed")
        assert not bilinear_residuals(*fg_of(bad), "i", kappa)[1].is_zero(1e-6)
    with pytest.raises(ConstraintViolated):
        special_two_soliton(1.0, WaveParams(2, 0), "i", 1)


def test_three_soliton():
    waves = [WaveParams(2, 0), WaveParams(R5, 1), WaveParams(R5, -1)]
    sol = three_soliton(*waves, 1, "i")
    assert scan(sol).max_abs <= 1e-8
    r1, r2 = bilinear_residuals(*fg_of(sol), 1, "i")
    assert r1.is_zero(1e-12) and r2.is_zero(1e-12)
    additive = three_soliton(*waves, 1, "i", b_rule="sum")
    r1, _ = bilinear_residuals(*fg_of(additive), 1, "i")
    assert not r1.is_zero(1e-6)


def test_three_to_two_limit():
    w1, w2 = WaveParams(2, 0), WaveParams(R5, 1)
    w3 = WaveParams(R5, -1, -30.0)
    s3 = three_soliton(w1, w2, w3, 1, "i")
    s2 = two_soliton(w1, w2, 1, "i")
    worst = 0.0
    for x in np.linspace(-3, 3, 21):
        for y in np.linspace(-3, 3, 21):
            worst = max(worst, abs(s3.value(x, y) - s2.value(x, y)))
    assert worst <= 1e-8


def test_three_equal_waves_collapse():
    w = WaveParams(2, 0)
    s = three_soliton(w, w, w, 1, "i")
    assert s.params["B"] == 0
    one = one_soliton(WaveParams(2, 0, math.log(3)), 1, "i")
    assert s.value(-0.4, 0.2) == pytest.approx(one.value(-0.4, 0.2), abs=1e-13)


def test_n_soliton_candidate():
    waves = [WaveParams(2, 0), WaveParams(R5, 1), WaveParams(R5, -1)]
    for n in (1, 2, 3):
        cand = n_soliton_candidate(waves[:n], 1, "i")
        ref = [one_soliton, two_soliton, three_soliton][n - 1](*waves[:n], 1, "i")
        for x, y in [(-0.5, 0.1), (0.3, -1.2)]:
            assert cand.value(x, y) == pytest.approx(ref.value(x, y), abs=1e-12)
    four = waves + [wave_from_angle(0.9, 1)]
    try:
        sol = n_soliton_candidate(four, 1, "i")
        outcome = "accepted"
        assert scan(sol).max_abs <= 1e-8
    except VerificationFailure as exc:
        outcome = "rejected"
        assert exc.residual is not None
    assert outcome in ("accepted", "rejected")
    with pytest.raises(DispersionViolated):
        n_soliton_candidate([WaveParams(1, 1)], 1, 1)


def test_bilinear_examples():
    r1, r2 = bilinear_residuals(ExpPoly.zero(), ExpPoly.const(1), 1, 1)
    assert r1.is_zero() and r2.is_zero()
    r1, r2 = bilinear_residuals(WaveParams(R5, 1).exp(), ExpPoly.const(1), 1, "i")
    assert r1.is_zero(1e-12) and r2.is_zero(1e-12)
    a, b = 0.7, 1.3
    F1 = cascade_example1(a, b).F(1)
    for kappa, k2 in ((1, 1), ("i", -1)):
        r1, r2 = bilinear_residuals(F1, ExpPoly.const(1), 1, kappa)
        assert r1.is_zero(1e-12)
        assert (r2 - ExpPoly.const(2 * k2 * 16 * a * b)).is_zero(1e-12)


def test_cascade_soliton_series():
    w = WaveParams(R5, 1)
    for rec in cascade_residuals(CascadeSeries([w.exp()]), 1, "i"):
        assert rec.is_zero()
    waves = [WaveParams(2, 0), WaveParams(R5, 1)]
    recs = cascade_residuals(soliton_series(waves, 1, "i"), 1, "i", max_order=4)
    assert len(recs) == 8 and all(r.is_zero(1e-12) for r in recs)
    three = [WaveParams(2, 0), WaveParams(R5, 1), WaveParams(R5, -1)]
    recs = cascade_residuals(soliton_series(three, 1, "i"), 1, "i")
    assert all(r.is_zero(1e-11) for r in recs)
    # the F_3 equation (order 3, F-kind) in particular
    assert [r for r in recs if r.order == 3 and r.kind == "F"][0].is_zero(1e-12)


def test_cascade_examples():
    for kappa, k2 in ((1, 1), ("i", -1)):
        recs = cascade_residuals(cascade_example1(2.0, 0.5), 1, kappa)
        assert recs[0].is_zero()
        g2 = [r for r in recs if r.order == 2 and r.kind == "G"][0].residual
        assert (g2 - ExpPoly.const(32 * k2 * 2.0 * 0.5)).is_zero(1e-12)
    for lam in (1.0, 2.5, 5.0):
        for d in (1, "i"):
            assert cascade_residuals(cascade_example2(lam, d), d, 1, 1)[0].is_zero(1e-12)
            assert not cascade_residuals(cascade_example2(lam, d, printed=True), d, 1, 1)[0].is_zero(1e-6)
    for d in (1, "i"):
        assert cascade_residuals(cascade_example3(d, 0.2, -0.4), d, 1, 1)[0].is_zero(1e-12)
        w1, w2 = example3_waves(d)
        assert w1.alpha * w2.alpha == pytest.approx(1)


def test_cascade_json_and_bounds():
    s = cascade_example1()
    t = CascadeSeries.from_json(s.to_json())
    assert t.F(1) == s.F(1)
    with pytest.raises(ValueError):
        cascade_residuals(s, 1, 1, max_order=4)
