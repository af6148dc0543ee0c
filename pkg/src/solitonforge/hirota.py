"""Hirota-method solitons of the normalized equation

    w_xx - delta^2 w_yy = (2/kappa) sinh(2 kappa w),   delta, kappa in {1, i}.

Solutions are carried as a pair of exponential polynomials (F, G) with
``tanh(kappa w / 2) = kappa F / G``; the bilinear system

    (D_x^2 - delta^2 D_y^2 - 4)(F . G) = 0
    (D_x^2 - delta^2 D_y^2)(kappa^2 F . F + G . G) = 0

is checked symbolically with :mod:`solitonforge.expsum`.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

from .core import (EquationSpec, Jet2, Solution, UnitParam, jarctanh, unit_square,
                   zero_set_distance)
from .errors import (ConstraintViolated, DegenerateDenominator, DispersionViolated,
                     VerificationFailure)
from .expsum import DPolynomial, ExpPoly, apply_dpoly, expoly_eval

DISPERSION_TOL = 1e-10
BILINEAR_TOL = 1e-12


@dataclass(frozen=True)
class WaveParams:
    """One wave eta = alpha x + beta y + gamma."""

    alpha: float
    beta: float
    gamma: float = 0.0

    def exp(self) -> ExpPoly:
        return ExpPoly.exp(self.alpha, self.beta, self.gamma)

    def to_json(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta, "gamma": self.gamma}


def wave_from_angle(t: float, delta, gamma: float = 0.0) -> WaveParams:
    """Dispersion-valid wave: (2 cosh t, 2 sinh t) for delta=1, (2 cos t, 2 sin t) for delta=i."""
    if unit_square(UnitParam.parse(delta)) > 0:
        return WaveParams(2 * math.cosh(t), 2 * math.sinh(t), gamma)
    return WaveParams(2 * math.cos(t), 2 * math.sin(t), gamma)


def dispersion_residual(w: WaveParams, delta) -> complex:
    d2 = unit_square(UnitParam.parse(delta))
    return complex(w.alpha * w.alpha - d2 * w.beta * w.beta - 4.0)


def _check_dispersion(waves: Sequence[WaveParams], delta):
    for k, w in enumerate(waves):
        r = dispersion_residual(w, delta)
        if abs(r) > DISPERSION_TOL:
            raise DispersionViolated(f"wave {k} violates alpha^2 - delta^2 beta^2 = 4 (residual {r.real:.3g})")


def interaction_coefficient(wi: WaveParams, wj: WaveParams, delta, kappa,
                            form: str = "ratio") -> complex:
    """Pairwise coefficient A_ij.

    ``form="ratio"`` uses the difference/sum quotient, ``form="alternate"`` the
    version obtained after eliminating alpha^2 and beta^2 with the dispersion
    relation.  Both agree for dispersion-valid waves.
    """
    d2 = unit_square(UnitParam.parse(delta))
    k2 = unit_square(UnitParam.parse(kappa))
    if form == "ratio":
        num = (wi.alpha - wj.alpha) ** 2 - d2 * (wi.beta - wj.beta) ** 2
        den = (wi.alpha + wj.alpha) ** 2 - d2 * (wi.beta + wj.beta) ** 2
    elif form == "alternate":
        num = 4 - wi.alpha * wj.alpha + d2 * wi.beta * wj.beta
        den = 4 + wi.alpha * wj.alpha - d2 * wi.beta * wj.beta
    else:
        raise ValueError(f"unknown form {form!r}")
    if abs(den) <= 1e-12:
        raise DegenerateDenominator(f"interaction denominator vanishes ({den!r})")
    return complex(-k2 * num / den)


@dataclass
class SolitonSpec:
    delta: UnitParam
    kappa: UnitParam
    waves: list
    b_rule: str = "product"
    A: list = field(init=False)
    B: complex = field(init=False)

    def __post_init__(self):
        self.delta = UnitParam.parse(self.delta)
        self.kappa = UnitParam.parse(self.kappa)
        self.waves = [w if isinstance(w, WaveParams) else WaveParams(**w) for w in self.waves]
        n = len(self.waves)
        self.A = [[0j] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                a = interaction_coefficient(self.waves[i], self.waves[j], self.delta, self.kappa)
                self.A[i][j] = self.A[j][i] = a
        self.B = 0j
        if n == 3:
            a12, a13, a23 = self.A[0][1], self.A[0][2], self.A[1][2]
            if self.b_rule == "product":
                self.B = a12 * a13 * a23
            elif self.b_rule == "sum":
                self.B = a12 + a13 + a23
            else:
                raise ValueError(f"unknown b_rule {self.b_rule!r}")

    def dispersion_residuals(self) -> list:
        return [dispersion_residual(w, self.delta) for w in self.waves]

    def to_json(self) -> dict:
        return {"delta": self.delta.value, "kappa": self.kappa.value,
                "waves": [w.to_json() for w in self.waves]}

    @classmethod
    def from_json(cls, d: dict) -> "SolitonSpec":
        return cls(d["delta"], d["kappa"], [WaveParams(**w) for w in d["waves"]])


# ---------------------------------------------------------------------------
# (F, G) pairs as solutions
# ---------------------------------------------------------------------------

def fg_solution(F: ExpPoly, G: ExpPoly, delta, kappa, family: str, params: dict | None = None) -> Solution:
    """Solution w = (2/kappa) arctanh(kappa F / G) for the normalized equation."""
    delta = UnitParam.parse(delta)
    kappa = UnitParam.parse(kappa)
    kz = kappa.z

    def ev(x, y):
        Fj = expoly_eval(F, x, y)
        Gj = expoly_eval(G, x, y)
        return jarctanh(Fj * kz / Gj) * (2 / kz)

    def singular(x, y, margin=1e-6):
        Fj = expoly_eval(F, x, y)
        Gj = expoly_eval(G, x, y)
        for phi in (Gj, Gj - Fj * kz, Gj + Fj * kz):
            if zero_set_distance(phi) < margin:
                return True
        return False

    def potential(x, y):
        return kz * F.value(x, y) / G.value(x, y)

    p = {"F": F, "G": G, "delta": delta, "kappa": kappa}
    p.update(params or {})
    return Solution(ev, family, p, singular, potential, EquationSpec.normalized(delta, kappa))


def bilinear_residuals(F: ExpPoly, G: ExpPoly, delta, kappa) -> tuple[ExpPoly, ExpPoly]:
    d2 = unit_square(UnitParam.parse(delta))
    k2 = unit_square(UnitParam.parse(kappa))
    P4 = DPolynomial.box(d2, 4.0)
    P0 = DPolynomial.box(d2)
    r1 = apply_dpoly(P4, F, G)
    r2 = apply_dpoly(P0, F, F) * k2 + apply_dpoly(P0, G, G)
    return r1, r2


def one_soliton(w: WaveParams, delta, kappa) -> Solution:
    _check_dispersion([w], delta)
    return fg_solution(w.exp(), ExpPoly.const(1), delta, kappa, "one_soliton", {"waves": [w]})


def two_soliton(w1: WaveParams, w2: WaveParams, delta, kappa) -> Solution:
    _check_dispersion([w1, w2], delta)
    A = interaction_coefficient(w1, w2, delta, kappa)
    e1, e2 = w1.exp(), w2.exp()
    F = e1 + e2
    G = ExpPoly.const(1) + e1 * e2 * A
    return fg_solution(F, G, delta, kappa, "two_soliton", {"waves": [w1, w2], "A": A})


def special_wave(c: float, delta, gamma: float = 0.0, sign: int = 1) -> WaveParams:
    """Solve alpha + delta^2 beta c = 0 and alpha^2 - delta^2 beta^2 = 4 for real (alpha, beta)."""
    d2 = unit_square(UnitParam.parse(delta))
    # beta^2 (c^2 - d2) = 4 after eliminating alpha = -d2 beta c
    q = c * c - d2
    if q <= 0:
        raise ConstraintViolated(f"no real wave for c={c} (beta^2 = 4/{q:g})", residual=q)
    beta = sign * 2.0 / math.sqrt(q)
    return WaveParams(-d2 * beta * c, beta, gamma)


def special_coefficient(c: float, delta, kappa, rule: str = "exact") -> complex:
    """G_2 coefficient for the special two-soliton.

    ``rule="printed"`` returns the /4 variant, which does not solve the
    bilinear system; the exact value carries /16.
    """
    d2 = unit_square(UnitParam.parse(delta))
    k2 = unit_square(UnitParam.parse(kappa))
    div = {"exact": 16.0, "printed": 4.0}[rule]
    return complex(k2 * (1 - d2 * c * c) / div)


def special_two_soliton(c: float, w: WaveParams, delta, kappa, rule: str = "exact") -> Solution:
    d2 = unit_square(UnitParam.parse(delta))
    r1 = w.alpha + d2 * w.beta * c
    r2 = dispersion_residual(w, delta)
    if abs(r1) > DISPERSION_TOL or abs(r2) > DISPERSION_TOL:
        raise ConstraintViolated(f"special wave constraints violated ({r1:.3g}, {r2.real:.3g})",
                                 residual=max(abs(r1), abs(r2)))
    A = special_coefficient(c, delta, kappa, rule)
    e = w.exp()
    F = (ExpPoly.monomial(1, 0) - ExpPoly.monomial(0, 1, c)) * e
    G = ExpPoly.const(1) + e * e * A
    return fg_solution(F, G, delta, kappa, "special_two_soliton", {"waves": [w], "c": c, "A": A})


def three_soliton(w1: WaveParams, w2: WaveParams, w3: WaveParams, delta, kappa,
                  b_rule: str = "product") -> Solution:
    """Three-soliton with F cubic coefficient B = A12 A13 A23 (``b_rule="sum"`` for the additive variant)."""
    waves = [w1, w2, w3]
    _check_dispersion(waves, delta)
    s = SolitonSpec(delta, kappa, waves, b_rule=b_rule)
    e = [w.exp() for w in waves]
    F = e[0] + e[1] + e[2] + e[0] * e[1] * e[2] * s.B
    G = (ExpPoly.const(1) + e[0] * e[1] * s.A[0][1] + e[0] * e[2] * s.A[0][2]
         + e[1] * e[2] * s.A[1][2])
    return fg_solution(F, G, delta, kappa, "three_soliton",
                       {"waves": waves, "A": s.A, "B": s.B, "b_rule": b_rule})


def n_soliton_fg(waves: Sequence[WaveParams], delta, kappa) -> tuple[ExpPoly, ExpPoly]:
    """Sum-over-subsets ansatz: odd subsets go to F, even ones to G, weighted by prod A_ij."""
    n = len(waves)
    A = [[0j] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            A[i][j] = A[j][i] = interaction_coefficient(waves[i], waves[j], delta, kappa)
    e = [w.exp() for w in waves]
    F = ExpPoly.zero()
    G = ExpPoly.zero()
    for r in range(n + 1):
        for sub in itertools.combinations(range(n), r):
            coeff = 1 + 0j
            for i, j in itertools.combinations(sub, 2):
                coeff *= A[i][j]
            term = ExpPoly.const(coeff)
            for i in sub:
                term = term * e[i]
            if r % 2:
                F = F + term
            else:
                G = G + term
    return F, G


def n_soliton_candidate(waves: Sequence[WaveParams], delta, kappa, tol: float = BILINEAR_TOL) -> Solution:
    """Build the N-wave subset ansatz and accept it only if the bilinear residuals vanish.

    The tolerance is applied relative to the largest coefficient of F and G.
    """
    waves = list(waves)
    if not 1 <= len(waves) <= 6:
        raise ValueError("n_soliton_candidate supports 1 to 6 waves")
    _check_dispersion(waves, delta)
    F, G = n_soliton_fg(waves, delta, kappa)
    r1, r2 = bilinear_residuals(F, G, delta, kappa)
    scale = max(1.0, F.max_coeff(), G.max_coeff()) ** 2
    if not (r1.is_zero(tol * scale) and r2.is_zero(tol * scale)):
        raise VerificationFailure("subset ansatz does not satisfy the bilinear system", (r1, r2))
    return fg_solution(F, G, delta, kappa, f"{len(waves)}_soliton", {"waves": waves})


# ---------------------------------------------------------------------------
# perturbation cascade
# ---------------------------------------------------------------------------

@dataclass
class CascadeSeries:
    """F = sum_n F_n, G = 1 + sum_n G_n (perturbation parameter set to 1)."""

    F_terms: list = field(default_factory=list)
    G_terms: list = field(default_factory=list)

    def F(self, n: int) -> ExpPoly:
        return self.F_terms[n - 1] if 1 <= n <= len(self.F_terms) else ExpPoly.zero()

    def G(self, n: int) -> ExpPoly:
        if n == 0:
            return ExpPoly.const(1)
        return self.G_terms[n - 1] if 1 <= n <= len(self.G_terms) else ExpPoly.zero()

    def to_json(self) -> dict:
        return {"F": [f.to_json() for f in self.F_terms], "G": [g.to_json() for g in self.G_terms]}

    @classmethod
    def from_json(cls, d: dict) -> "CascadeSeries":
        return cls([ExpPoly.from_json(t) for t in d.get("F", [])],
                   [ExpPoly.from_json(t) for t in d.get("G", [])])


@dataclass(frozen=True)
class CascadeResidual:
    order: int
    kind: str  # "F" for the (F . G) equation, "G" for the (kappa^2 F.F + G.G) equation
    residual: ExpPoly

    def is_zero(self, tol: float = BILINEAR_TOL) -> bool:
        return self.residual.is_zero(tol)


def cascade_residuals(s: CascadeSeries, delta, kappa, max_order: int | None = None) -> list:
    """Residual of each order-n coefficient of the two bilinear equations.

    Order n contributes two records: the F-equation
    sum_{i+j=n} (D_x^2 - delta^2 D_y^2 - 4)(F_i . G_j) and the G-equation
    sum_{i+j=n} (D_x^2 - delta^2 D_y^2)(kappa^2 F_i . F_j + G_i . G_j), both
    with F_0 = 0, G_0 = 1.  The G-equation is not halved.
    """
    nterms = max(len(s.F_terms), len(s.G_terms))
    limit = 2 * nterms + 1
    if max_order is None:
        max_order = limit
    if max_order > max(limit, 1):
        raise ValueError(f"max_order must be <= {limit}")
    d2 = unit_square(UnitParam.parse(delta))
    k2 = unit_square(UnitParam.parse(kappa))
    P4 = DPolynomial.box(d2, 4.0)
    P0 = DPolynomial.box(d2)
    out = []
    for n in range(1, max_order + 1):
        rf = ExpPoly.zero()
        rg = ExpPoly.zero()
        for i in range(0, n + 1):
            j = n - i
            Fi = s.F(i) if i else ExpPoly.zero()
            Fj = s.F(j) if j else ExpPoly.zero()
            if Fi:
                rf = rf + apply_dpoly(P4, Fi, s.G(j))
            if Fi and Fj:
                rg = rg + apply_dpoly(P0, Fi, Fj) * k2
            Gi, Gj = s.G(i), s.G(j)
            if Gi and Gj and (i or j):
                rg = rg + apply_dpoly(P0, Gi, Gj)
        out.append(CascadeResidual(n, "F", rf))
        out.append(CascadeResidual(n, "G", rg))
    return out


def cascade_example1(alpha: float = 1.0, beta: float = 1.0) -> CascadeSeries:
    """F_1 = alpha e^{2x} + beta e^{-2x}."""
    return CascadeSeries([ExpPoly.exp(2, 0, coeff=alpha) + ExpPoly.exp(-2, 0, coeff=beta)])


def cascade_example2(lam: float, delta, printed: bool = False) -> CascadeSeries:
    """F_1 = X(x) Y(y) from X'' = lam X, Y'' = delta^2 (lam - 4) Y with X(0)=Y(0)=1, X'(0)=Y'(0)=0.

    That is cosh(sqrt(lam) x) cos(delta sqrt(4 - lam) y), written in exponentials
    (complex square roots, so any real lam works).  ``printed=True`` swaps the
    x factor for cos(sqrt(lam) x), which is not annihilated by box - 4.
    """
    d = UnitParam.parse(delta).z
    r = cmath.sqrt(lam)
    s = d * cmath.sqrt(4 - lam)
    if printed:
        xs = [(1j * r, 0.5), (-1j * r, 0.5)]
    else:
        xs = [(r, 0.5), (-r, 0.5)]
    ys = [(1j * s, 0.5), (-1j * s, 0.5)]
    F = ExpPoly([(cx * cy, 0, 0, ax, by) for ax, cx in xs for by, cy in ys])
    return CascadeSeries([F])


def example3_waves(delta, gamma1: float = 0.0, gamma2: float = 0.0):
    """(alpha_i, beta_i) for F_1 = e^{eta_1} sin(eta_2), signs fixed by
    alpha_1 alpha_2 = 1 and delta^2 beta_1 beta_2 = 1."""
    d2 = unit_square(UnitParam.parse(delta))
    r2 = math.sqrt(2.0)
    a1 = math.sqrt(1 + r2)
    a2 = math.sqrt(r2 - 1)
    b1 = math.sqrt(r2 - d2)
    b2 = d2 * math.sqrt(r2 + d2)
    return WaveParams(a1, b1, gamma1), WaveParams(a2, b2, gamma2)


def cascade_example3(delta, gamma1: float = 0.0, gamma2: float = 0.0) -> CascadeSeries:
    w1, w2 = example3_waves(delta, gamma1, gamma2)
    e1 = w1.exp()
    sin2 = (ExpPoly.exp(1j * w2.alpha, 1j * w2.beta, 1j * w2.gamma)
            - ExpPoly.exp(-1j * w2.alpha, -1j * w2.beta, -1j * w2.gamma)) * (-0.5j)
    return CascadeSeries([e1 * sin2])


def soliton_series(waves: Sequence[WaveParams], delta, kappa) -> CascadeSeries:
    """Cascade form of the subset ansatz: F_n / G_n collect the n-wave subsets."""
    n = len(waves)
    A = [[0j] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            A[i][j] = A[j][i] = interaction_coefficient(waves[i], waves[j], delta, kappa)
    e = [w.exp() for w in waves]
    F_terms = [ExpPoly.zero() for _ in range(n)]
    G_terms = [ExpPoly.zero() for _ in range(n)]
    for r in range(1, n + 1):
        for sub in itertools.combinations(range(n), r):
            coeff = 1 + 0j
            for i, j in itertools.combinations(sub, 2):
                coeff *= A[i][j]
            term = ExpPoly.const(coeff)
            for i in sub:
                term = term * e[i]
            if r % 2:
                F_terms[r - 1] = F_terms[r - 1] + term
            else:
                G_terms[r - 1] = G_terms[r - 1] + term
    return CascadeSeries(F_terms, G_terms)


def fg_of(sol: Solution) -> tuple[ExpPoly, ExpPoly]:
    return sol.params["F"], sol.params["G"]


def solution_jet(F: ExpPoly, G: ExpPoly, kappa, x: float, y: float) -> Jet2:
    kz = UnitParam.parse(kappa).z
    return jarctanh(expoly_eval(F, x, y) * kz / expoly_eval(G, x, y)) * (2 / kz)
