import json
import math

import numpy as np
import pytest

from solitonforge.core import Jet2
from solitonforge.expsum import (MAX_DEGREE, DPolynomial, ExpPoly, Term, apply_dpoly,
                                 apply_operator, d_op, expoly_eval, is_zero)


def random_expoly(rng, nterms=None) -> ExpPoly:
    n = nterms or int(rng.integers(1, 4))
    terms = []
    for _ in range(n):
        c = complex(*rng.normal(size=2))
        a = complex(rng.integers(-3, 4), rng.integers(-1, 2) * 0.5)
        b = complex(rng.integers(-2, 3), 0.0)
        terms.append(Term(c, int(rng.integers(0, 2)), int(rng.integers(0, 2)), a, b))
    return ExpPoly(terms)


def close(f: ExpPoly, g: ExpPoly, tol=1e-12) -> bool:
    scale = max(1.0, f.max_coeff(), g.max_coeff())
    return (f - g).is_zero(tol * scale)


def test_canonical_form():
    f = ExpPoly.exp(1, 0) + ExpPoly.exp(1, 0) + ExpPoly.exp(-1, 2, coeff=3)
    assert len(f) == 2
    keys = [t.sort_key() for t in f]
    assert keys == sorted(keys)
    assert (ExpPoly.exp(1, 0) - ExpPoly.exp(1, 0)).terms == ()
    assert ExpPoly.exp(1, 0, coeff=1e-20).terms == ()


def test_near_equal_exponents_merge():
    a = math.sqrt(5.0)
    f = ExpPoly.exp(a, 1) + ExpPoly.exp(math.sqrt(5.0 + 1e-15), 1)
    assert len(f) == 1 and f.terms[0].coeff == pytest.approx(2.0)


def test_degree_cap():
    x = ExpPoly.monomial(1, 0)
    p = x
    for _ in range(MAX_DEGREE - 1):
        p = p * x
    assert p.terms[0].px == MAX_DEGREE
    with pytest.raises(ValueError):
        p * x


def test_is_zero_examples():
    assert is_zero(ExpPoly.exp(1, 0) - ExpPoly.exp(1, 0))
    assert is_zero(ExpPoly([Term(1e-20, 0, 0, 1, 0)]), 1e-14)
    F1 = ExpPoly.exp(2, 0, coeff=0.7) + ExpPoly.exp(-2, 0, coeff=1.3)
    r = d_op(2, 0, F1, F1)
    assert not is_zero(r)
    assert close(r, ExpPoly.const(32 * 0.7 * 1.3))


def test_d_op_exponentials():
    a, b = 1.5, -0.5
    r = d_op(1, 0, ExpPoly.exp(a, 0), ExpPoly.exp(b, 0))
    assert close(r, ExpPoly.exp(a + b, 0, coeff=a - b))
    e = ExpPoly.exp(2.0, 1.0, 0.3)
    assert d_op(2, 0, e, e).is_zero()
    for mx, my in [(1, 1), (2, 3), (0, 2)]:
        f = ExpPoly.exp(1.2, -0.7)
        g = ExpPoly.exp(-0.4, 2.1)
        r = d_op(mx, my, f, g)
        expect = ExpPoly.exp(0.8, 1.4, coeff=(1.6 ** mx) * ((-2.8) ** my))
        assert close(r, expect)


def test_d_op_matches_definition_on_polynomial_prefactors():
    # D_x (f . g) = f_x g - f g_x for non-exponential terms too
    f = (ExpPoly.monomial(1, 0) - ExpPoly.monomial(0, 1, 2.0)) * ExpPoly.exp(1, 1)
    g = ExpPoly.const(1) + ExpPoly.exp(2, 2, coeff=0.25)
    assert close(d_op(1, 0, f, g), f.dx() * g - f * g.dx())
    lhs = d_op(2, 0, f, g)
    rhs = f.dx(2) * g - f.dx() * g.dx() * 2 + f * g.dx(2)
    assert close(lhs, rhs)


def test_antisymmetry(rng):
    for _ in range(100):
        f, g = random_expoly(rng), random_expoly(rng)
        mx, my = int(rng.integers(0, 4)), int(rng.integers(0, 3))
        sign = (-1) ** (mx + my)
        assert close(d_op(mx, my, f, g), d_op(mx, my, g, f) * sign)
    P = DPolynomial(((1.0, 1, 0),))
    f, g = random_expoly(rng), random_expoly(rng)
    assert close(apply_dpoly(P, f, g), -apply_dpoly(P, g, f))


def test_odd_order_self_product_vanishes(rng):
    for _ in range(100):
        f = random_expoly(rng)
        for n in range(4):
            assert d_op(2 * n + 1, 0, f, f).is_zero(1e-12 * max(1.0, f.max_coeff()) ** 2 * 10 ** n)
        assert d_op(0, 1, f, f).is_zero(1e-12 * max(1.0, f.max_coeff()) ** 2)


def test_right_unit_rule(rng):
    one = ExpPoly.const(1)
    for _ in range(100):
        f = random_expoly(rng)
        P = DPolynomial(tuple((complex(*rng.normal(size=2)), int(rng.integers(0, 3)),
                               int(rng.integers(0, 3))) for _ in range(3)))
        assert close(apply_dpoly(P, f, one), apply_operator(P, f), 1e-11)


def test_apply_dpoly_examples():
    f = ExpPoly.exp(3, 0) + ExpPoly.monomial(1, 0) * ExpPoly.exp(-1, 0)
    P = DPolynomial(((1.0, 2, 0), (-4.0, 0, 0)))
    assert close(apply_dpoly(P, f, ExpPoly.const(1)), f.dx(2) - f * 4)
    assert apply_dpoly(DPolynomial(()), f, f).is_zero()
    box = DPolynomial.box(-1, 4.0)
    assert box.monomials == ((-4.0, 0, 0), (1.0, 0, 2), (1.0, 2, 0))


def test_eval_examples():
    j = ExpPoly.exp(2, 0).eval(0, 0)
    assert (j.v, j.vx, j.vxx) == (1, 2, 4)
    j = expoly_eval(ExpPoly.monomial(1, 0), 3, 1)
    assert j.slots() == (3, 1, 0, 0, 0, 0)


def test_eval_against_fd():
    f = (ExpPoly.monomial(1, 0) - ExpPoly.monomial(0, 1, 2.0)) * ExpPoly.exp(1, 1)
    j = f.eval(1, 1)
    h = 1e-4
    v = f.value
    assert abs((v(1 + h, 1) - v(1 - h, 1)) / (2 * h) - j.vx) < 1e-6
    assert abs((v(1, 1 + h) - v(1, 1 - h)) / (2 * h) - j.vy) < 1e-6
    assert abs((v(1 + h, 1) - 2 * v(1, 1) + v(1 - h, 1)) / h ** 2 - j.vxx) < 1e-4
    mixed = (v(1 + h, 1 + h) - v(1 + h, 1 - h) - v(1 - h, 1 + h) + v(1 - h, 1 - h)) / (4 * h * h)
    assert abs(mixed - j.vxy) < 1e-4
    assert j.v == pytest.approx(f.value(1, 1))


def test_leibniz_consistency(rng):
    for _ in range(20):
        f, g = random_expoly(rng), random_expoly(rng)
        x, y = rng.uniform(-1, 1, 2)
        a = (f * g).eval(x, y)
        b = f.eval(x, y) * g.eval(x, y)
        for u, v in zip(a.slots(), b.slots()):
            assert u == pytest.approx(v, rel=1e-11, abs=1e-11)


def test_json_roundtrip(rng):
    f = random_expoly(rng, 3)
    data = f.to_json()
    assert set(data[0]) == {"c_re", "c_im", "px", "py", "a_re", "a_im", "b_re", "b_im"}
    g = ExpPoly.from_json(json.dumps(data))
    assert g == f
    assert ExpPoly.from_json([]) == ExpPoly.zero()


def test_immutable():
    f = ExpPoly.const(1)
    with pytest.raises(AttributeError):
        f.terms = ()
    with pytest.raises(ValueError):
        ExpPoly([Term(1.0, -1, 0, 0, 0)])


def test_eval_returns_jet():
    assert isinstance(ExpPoly.zero().eval(0.1, 0.2), Jet2)
    assert np.isclose(ExpPoly.const(2.5).value(4, 5), 2.5)
