import math
import threading

import numpy as np
import pytest
from scipy.integrate import solve_ivp, trapezoid
from scipy.special import ellipj

from solitonforge.specialfn import (CumulativeIntegral, QuadratureSpec, adaptive_quad,
                                    antiderivative_jet, jacobi_sn_cn_dn,
                                    partial_antiderivative_x, partial_antiderivative_y)
from solitonforge.core import Jet2
from solitonforge.errors import ModulusOutOfRange, SingularIntegrand, ToleranceNotMet


def test_jacobi_initial_values():
    for m in (0.0, 0.2, 0.9, 1.0):
        assert jacobi_sn_cn_dn(0.0, m) == (0.0, 1.0, 1.0)


def test_jacobi_degenerate_moduli():
    for u in np.linspace(-4, 4, 17):
        sn, cn, dn = jacobi_sn_cn_dn(u, 0.0)
        assert (sn, cn, dn) == pytest.approx((math.sin(u), math.cos(u), 1.0), abs=1e-12)
        sn, cn, dn = jacobi_sn_cn_dn(u, 1.0)
        s = 1 / math.cosh(u)
        assert (sn, cn, dn) == pytest.approx((math.tanh(u), s, s), abs=1e-12)


def test_jacobi_near_degenerate_moduli_continuous():
    for u in (0.3, 1.7, -2.2):
        a = np.array(jacobi_sn_cn_dn(u, 1e-14))
        assert np.max(np.abs(a - [math.sin(u), math.cos(u), 1.0])) < 1e-12
        b = np.array(jacobi_sn_cn_dn(u, 1 - 1e-15))
        s = 1 / math.cosh(u)
        assert np.max(np.abs(b - [math.tanh(u), s, s])) < 1e-12


def test_jacobi_against_defining_ode():
    def rhs(_, s):
        sn, cn, dn = s
        return [cn * dn, -sn * dn, -0.36 * sn * cn]

    ref = solve_ivp(rhs, (0, 0.7), [0, 1, 1], method="DOP853", rtol=1e-13, atol=1e-14).y[:, -1]
    assert np.max(np.abs(np.array(jacobi_sn_cn_dn(0.7, 0.36)) - ref)) < 1e-10


def test_jacobi_identities_and_scipy(rng):
    for _ in range(1000):
        u = rng.uniform(-20, 20)
        m = rng.uniform(0, 1)
        sn, cn, dn = jacobi_sn_cn_dn(u, m)
        assert abs(sn * sn + cn * cn - 1) <= 1e-12
        assert abs(dn * dn + m * sn * sn - 1) <= 1e-12
        ref = ellipj(u, m)[:3]
        assert np.max(np.abs(np.array([sn, cn, dn]) - ref)) < 1e-9


def test_jacobi_rejects_bad_modulus():
    with pytest.raises(ModulusOutOfRange):
        jacobi_sn_cn_dn(0.3, 1.5)
    with pytest.raises(ModulusOutOfRange):
        jacobi_sn_cn_dn(0.3, -0.1)


def test_quad_trivial():
    assert adaptive_quad(lambda t: 1.0, 0, 1).value == pytest.approx(1.0, abs=1e-15)
    assert adaptive_quad(lambda t: 2 * t, 0, 1).value == pytest.approx(1.0, abs=1e-15)
    r = adaptive_quad(lambda t: 1.0, 2.0, 2.0)
    assert r.value == 0 and r.error == 0


def test_quad_elliptic_integral_against_trapezoid():
    k = math.sqrt(3.0)

    def f(t):
        F = np.sinh(k * t) / k
        return (1 + F * F) / (1 - F * F)

    t = np.linspace(0.0, 0.5, 1_000_001)
    ref = trapezoid(f(t), t)
    val = adaptive_quad(f, 0.0, 0.5).value
    assert abs(val - ref) < 1e-8


def test_quad_complex_and_vector():
    v = adaptive_quad(lambda t: np.exp(1j * t), 0, math.pi).value
    assert abs(v - 2j) < 1e-13
    vec = adaptive_quad(lambda t: np.array([t, t * t]), 0, 3).value
    assert np.allclose(vec, [4.5, 9.0], atol=1e-13)


def test_quad_additivity():
    f = lambda t: math.exp(-t * t) * math.cos(3 * t)  # noqa: E731
    a = adaptive_quad(f, -1, 0.4)
    b = adaptive_quad(f, 0.4, 2.5)
    c = adaptive_quad(f, -1, 2.5)
    assert abs(a.value + b.value - c.value) <= a.error + b.error + c.error + 1e-15


def test_quad_reversed_limits():
    f = lambda t: t ** 3  # noqa: E731
    assert adaptive_quad(f, 2, 0).value == pytest.approx(-4.0, abs=1e-13)


def test_quad_errors():
    with pytest.raises(SingularIntegrand):
        adaptive_quad(lambda t: 1 / (t - 0.5) if t != 0.5 else math.inf, 0, 1)
    with pytest.raises(SingularIntegrand):
        adaptive_quad(lambda t: 1 / (t - 0.5), 0, 1)  # ZeroDivisionError at the centre node
    with pytest.raises(ToleranceNotMet):
        adaptive_quad(lambda t: 1 / (t - 0.3), 0, 1, QuadratureSpec(max_depth=10))
    with pytest.raises(ValueError):
        QuadratureSpec(max_depth=5)
    with pytest.raises(ValueError):
        QuadratureSpec(abs_tol=0.0)


def test_cumulative_integral_deterministic_and_threadsafe():
    f = lambda t: math.cos(t) * math.exp(0.1 * t)  # noqa: E731
    pts = np.linspace(-3, 3, 61)
    a = CumulativeIntegral(f)
    fwd = [a(t) for t in pts]
    b = CumulativeIntegral(f)
    bwd = [b(t) for t in pts[::-1]][::-1]
    assert fwd == bwd  # bit-identical regardless of call order
    c = CumulativeIntegral(f)
    out = [None] * len(pts)

    def work(idx):
        for i in idx:
            out[i] = c(pts[i])

    threads = [threading.Thread(target=work, args=(range(k, len(pts), 4),)) for k in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert out == fwd
    for t, v in zip(pts, fwd):
        ref = adaptive_quad(f, 0, t).value
        assert abs(v - ref) < 1e-12


def test_cumulative_integral_remembers_failures():
    calls = [0]

    def f(t):
        calls[0] += 1
        return 1 / (1 - t)

    c = CumulativeIntegral(f)
    with pytest.raises((SingularIntegrand, ToleranceNotMet)):
        c(1.5)
    n = calls[0]
    with pytest.raises((SingularIntegrand, ToleranceNotMet)):
        c(1.5)
    with pytest.raises((SingularIntegrand, ToleranceNotMet)):
        c(2.5)
    assert calls[0] == n


def test_antiderivative_jet_examples():
    j = antiderivative_jet(lambda t: (1.0, 0.0), 2.0)
    assert (j.v, j.vx, j.vxx) == pytest.approx((2, 1, 0))
    j = antiderivative_jet(lambda t: (2 * t, 2.0), 1.0)
    assert (j.v, j.vx, j.vxx) == pytest.approx((1, 2, 2))
    assert j.vy == 0 and j.vyy == 0 and j.vxy == 0


def test_antiderivative_jet_derivative_matches_fd():
    k = math.sqrt(3.0)

    def integrand(t):
        F = math.sinh(k * t) / k
        dF = math.cosh(k * t)
        v = (1 + F * F) / (1 - F * F)
        dv = 4 * F * dF / (1 - F * F) ** 2
        return v, dv

    x, h = 0.4, 1e-4
    j = antiderivative_jet(integrand, x)
    jp = antiderivative_jet(integrand, x + h)
    jm = antiderivative_jet(integrand, x - h)
    assert abs((jp.v - jm.v) / (2 * h) - j.vx) < 1e-7
    assert abs((jp.v - 2 * j.v + jm.v) / h ** 2 - j.vxx) < 1e-4


def test_partial_antiderivatives():
    # h(x, s) = x^2 s  ->  Y = x^2 y^2 / 2
    def h(x, s):
        X, S = Jet2.var_x(x), Jet2.var_y(s)
        return X * X * S

    j = partial_antiderivative_y(h, 1.5, 2.0)
    assert j.slots() == pytest.approx((4.5, 6.0, 4.5, 4.0, 6.0, 2.25))

    def g(t, y):
        T, Y = Jet2.var_x(t), Jet2.var_y(y)
        return T * Y * Y

    j = partial_antiderivative_x(g, 2.0, 1.5)
    # X = t^2 y^2 / 2 at (2, 1.5)
    assert j.slots() == pytest.approx((4.5, 4.5, 6.0, 2.25, 6.0, 4.0))
