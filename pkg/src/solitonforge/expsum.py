"""Exponential polynomials and the Hirota bilinear operator.

An :class:`ExpPoly` is a finite sum of terms ``c * x**px * y**py * exp(alpha*x + beta*y)``
with complex ``c``, ``alpha`` and ``beta``.  The set is closed under addition,
multiplication and differentiation, which is all the bilinear machinery needs.
Exponents that agree to within ``KEY_TOL`` are merged, since dispersion-related
parameters (for example alpha_1 + alpha_2 computed two ways) rarely agree
bit-for-bit.
"""

from __future__ import annotations

import cmath
import json
from dataclasses import dataclass
from math import comb
from typing import Iterable

from .core import Jet2, jexp

PRUNE_TOL = 1e-14
KEY_TOL = 1e-12
MAX_DEGREE = 8


def _close(a: complex, b: complex) -> bool:
    return abs(a - b) <= KEY_TOL * max(1.0, abs(a), abs(b))


@dataclass(frozen=True)
class Term:
    coeff: complex
    px: int
    py: int
    alpha: complex
    beta: complex

    def sort_key(self):
        return (self.alpha.real, self.alpha.imag, self.beta.real, self.beta.imag, self.px, self.py)


class ExpPoly:
    """Canonical sum of exponential-polynomial terms (immutable)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable = ()):
        merged: list[list] = []  # [alpha, beta, px, py, coeff]
        for t in terms:
            if not isinstance(t, Term):
                t = Term(complex(t[0]), int(t[1]), int(t[2]), complex(t[3]), complex(t[4]))
            if t.px < 0 or t.py < 0:
                raise ValueError("negative polynomial degree")
            if t.px > MAX_DEGREE or t.py > MAX_DEGREE:
                raise ValueError(f"polynomial degree exceeds cap {MAX_DEGREE}")
            for m in merged:
                if m[2] == t.px and m[3] == t.py and _close(m[0], t.alpha) and _close(m[1], t.beta):
                    m[4] += t.coeff
                    break
            else:
                merged.append([t.alpha, t.beta, t.px, t.py, t.coeff])
        out = [Term(m[4], m[2], m[3], m[0], m[1]) for m in merged if abs(m[4]) > PRUNE_TOL]
        out.sort(key=Term.sort_key)
        object.__setattr__(self, "terms", tuple(out))

    def __setattr__(self, name, value):
        raise AttributeError("ExpPoly is immutable")

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls) -> "ExpPoly":
        return cls()

    @classmethod
    def const(cls, c) -> "ExpPoly":
        return cls([Term(complex(c), 0, 0, 0j, 0j)])

    @classmethod
    def exp(cls, alpha, beta, gamma=0.0, coeff=1.0) -> "ExpPoly":
        """coeff * exp(alpha x + beta y + gamma); gamma is folded into the coefficient."""
        return cls([Term(complex(coeff) * cmath.exp(gamma), 0, 0, complex(alpha), complex(beta))])

    @classmethod
    def monomial(cls, px: int, py: int, coeff=1.0) -> "ExpPoly":
        return cls([Term(complex(coeff), px, py, 0j, 0j)])

    # algebra ------------------------------------------------------------
    def __add__(self, other):
        other = _lift(other)
        return ExpPoly(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return ExpPoly(Term(-t.coeff, t.px, t.py, t.alpha, t.beta) for t in self.terms)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        if isinstance(other, ExpPoly):
            return ExpPoly(
                Term(s.coeff * t.coeff, s.px + t.px, s.py + t.py, s.alpha + t.alpha, s.beta + t.beta)
                for s in self.terms for t in other.terms
            )
        c = complex(other)
        return ExpPoly(Term(c * t.coeff, t.px, t.py, t.alpha, t.beta) for t in self.terms)

    __rmul__ = __mul__

    def dx(self, n: int = 1) -> "ExpPoly":
        f = self
        for _ in range(n):
            out = []
            for t in f.terms:
                out.append(Term(t.coeff * t.alpha, t.px, t.py, t.alpha, t.beta))
                if t.px:
                    out.append(Term(t.coeff * t.px, t.px - 1, t.py, t.alpha, t.beta))
            f = ExpPoly(out)
        return f

    def dy(self, n: int = 1) -> "ExpPoly":
        f = self
        for _ in range(n):
            out = []
            for t in f.terms:
                out.append(Term(t.coeff * t.beta, t.px, t.py, t.alpha, t.beta))
                if t.py:
                    out.append(Term(t.coeff * t.py, t.px, t.py - 1, t.alpha, t.beta))
            f = ExpPoly(out)
        return f

    # inspection ---------------------------------------------------------
    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return not (self - other).terms

    def __hash__(self):
        return hash(len(self.terms))

    def max_coeff(self) -> float:
        return max((abs(t.coeff) for t in self.terms), default=0.0)

    def is_zero(self, tol: float = PRUNE_TOL) -> bool:
        return all(abs(t.coeff) <= tol for t in self.terms)

    def __repr__(self):
        if not self.terms:
            return "ExpPoly(0)"
        parts = []
        for t in self.terms:
            s = f"({t.coeff:.6g})"
            if t.px:
                s += f"*x^{t.px}"
            if t.py:
                s += f"*y^{t.py}"
            if t.alpha or t.beta:
                s += f"*exp({t.alpha:.6g}x+{t.beta:.6g}y)"
            parts.append(s)
        return "ExpPoly(" + " + ".join(parts) + ")"

    # evaluation ---------------------------------------------------------
    def eval(self, x: float, y: float) -> Jet2:
        return expoly_eval(self, x, y)

    def value(self, x: float, y: float) -> complex:
        return sum((t.coeff * x ** t.px * y ** t.py * cmath.exp(t.alpha * x + t.beta * y)
                    for t in self.terms), 0j)

    # serialization ------------------------------------------------------
    def to_json(self) -> list[dict]:
        return [
            {"c_re": t.coeff.real, "c_im": t.coeff.imag, "px": t.px, "py": t.py,
             "a_re": t.alpha.real, "a_im": t.alpha.imag, "b_re": t.beta.real, "b_im": t.beta.imag}
            for t in self.terms
        ]

    @classmethod
    def from_json(cls, data) -> "ExpPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            Term(complex(d["c_re"], d.get("c_im", 0.0)), int(d.get("px", 0)), int(d.get("py", 0)),
                 complex(d.get("a_re", 0.0), d.get("a_im", 0.0)),
                 complex(d.get("b_re", 0.0), d.get("b_im", 0.0)))
            for d in data
        )


def _lift(v) -> ExpPoly:
    if isinstance(v, ExpPoly):
        return v
    return ExpPoly.const(v)


def expoly_eval(f: ExpPoly, x: float, y: float) -> Jet2:
    """Exact second-order jet of f at (x, y)."""
    X = Jet2.var_x(x)
    Y = Jet2.var_y(y)
    acc = Jet2.const(0)
    for t in f.terms:
        j = jexp(X * t.alpha + Y * t.beta) * t.coeff
        if t.px:
            j = j * X ** t.px
        if t.py:
            j = j * Y ** t.py
        acc = acc + j
    return acc


def is_zero(f: ExpPoly, tol: float = PRUNE_TOL) -> bool:
    return f.is_zero(tol)


def d_op(mx: int, my: int, f: ExpPoly, g: ExpPoly) -> ExpPoly:
    """Hirota derivative D_x^mx D_y^my (f . g).

    Expands (d_x - d_x')^mx (d_y - d_y')^my f(x, y) g(x', y') at x' = x, y' = y.
    """
    if mx < 0 or my < 0:
        raise ValueError("negative D-operator order")
    # cache partial derivatives of both factors
    fd = {}
    gd = {}

    def part(cache, h, i, j):
        if (i, j) not in cache:
            cache[(i, j)] = h.dx(i).dy(j)
        return cache[(i, j)]

    acc = []
    for i in range(mx + 1):
        for j in range(my + 1):
            sign = -1 if (mx - i + my - j) % 2 else 1
            w = sign * comb(mx, i) * comb(my, j)
            prod = part(fd, f, i, j) * part(gd, g, mx - i, my - j)
            acc.extend(Term(w * t.coeff, t.px, t.py, t.alpha, t.beta) for t in prod.terms)
    return ExpPoly(acc)


@dataclass(frozen=True)
class DPolynomial:
    """sum of coeff * D_x^mx D_y^my."""

    monomials: tuple = ()

    def __post_init__(self):
        acc: dict[tuple[int, int], complex] = {}
        for c, mx, my in self.monomials:
            acc[(int(mx), int(my))] = acc.get((int(mx), int(my)), 0j) + complex(c)
        mons = tuple(sorted(((c, mx, my) for (mx, my), c in acc.items() if c != 0),
                            key=lambda m: (m[1], m[2])))
        object.__setattr__(self, "monomials", mons)

    def __add__(self, other: "DPolynomial") -> "DPolynomial":
        return DPolynomial(self.monomials + other.monomials)

    def scale(self, c) -> "DPolynomial":
        return DPolynomial(tuple((c * m[0], m[1], m[2]) for m in self.monomials))

    @classmethod
    def box(cls, delta_sq: int, shift: float = 0.0) -> "DPolynomial":
        """D_x^2 - delta^2 D_y^2 - shift."""
        mons = [(1.0, 2, 0), (-delta_sq, 0, 2)]
        if shift:
            mons.append((-shift, 0, 0))
        return cls(tuple(mons))


def apply_dpoly(P: DPolynomial, f: ExpPoly, g: ExpPoly) -> ExpPoly:
    acc = ExpPoly.zero()
    for c, mx, my in P.monomials:
        acc = acc + d_op(mx, my, f, g) * c
    return acc


def apply_operator(P: DPolynomial, f: ExpPoly) -> ExpPoly:
    """P(d) f as an ordinary linear differential operator."""
    acc = ExpPoly.zero()
    for c, mx, my in P.monomials:
        acc = acc + f.dx(mx).dy(my) * c
    return acc
