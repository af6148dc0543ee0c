"""Backlund transformations, a numerical auto-BT integrator and the closed forms built on it.

With eps = 1, a = -1, b = 0 the transformation maps solutions of

    delta (u_xx - u_yy) = 2 sinh(2 delta u)

to solutions of the same equation through

    delta f_x - delta g_y = 2 sinh(delta f) cosh(delta g)
    delta f_y - delta g_x = 2 cosh(delta f) sinh(delta g).

:func:`bt_integrate` marches this first-order system from f(0, 0) along one
axis and then along the perpendicular lines; it serves as the oracle against
which the closed-form evaluators are compared.
"""

from __future__ import annotations

import cmath
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp

from .core import (EquationSpec, Jet2, Solution, UnitParam, jarctanh, jexp, jsec, jsqrt, jtan,
                   jtanh, thread_count, unit_square)
from .errors import ConstraintViolated, SingularityEncountered, SingularPoint, StepSizeUnderflow
from .separation import Function1D, example5_solution, example10_solution
from .specialfn import CumulativeIntegral, QuadratureSpec, partial_antiderivative_x, partial_antiderivative_y

AGREE_TOL = 1e-5


def bt_spec(delta) -> EquationSpec:
    """The equation delta (u_xx - u_yy) = 2 sinh(2 delta u)."""
    return EquationSpec(delta, UnitParam.ONE, -1.0, 0.0)


# ---------------------------------------------------------------------------
# residual evaluators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BTPair:
    w: Solution
    theta: Solution
    spec: EquationSpec


def bt_residuals(p: BTPair, x: float, y: float) -> tuple[complex, complex]:
    """LHS - RHS of the general transformation linking w and theta:

    (delta/eps)(w_x - theta_y) = -sinh(delta w/eps) (c e^{delta theta} + cbar e^{-delta theta})
    (delta/eps^2)(w_y - eps^2 theta_x) = -cosh(delta w/eps) (c e^{delta theta} - cbar e^{-delta theta})
    """
    s = p.spec
    d, e = s.delta.z, s.eps.z
    w = p.w.eval(x, y)
    th = p.theta.eval(x, y)
    ep = cmath.exp(d * th.v)
    em = cmath.exp(-d * th.v)
    k = d / e
    r1 = k * (w.vx - th.vy) + cmath.sinh(k * w.v) * (s.c * ep + s.cbar * em)
    r2 = d / (e * e) * (w.vy - e * e * th.vx) + cmath.cosh(k * w.v) * (s.c * ep - s.cbar * em)
    return r1, r2


def theta_pde_residual(theta: Solution, spec: EquationSpec, x: float, y: float) -> complex:
    d, e = spec.delta.z, spec.eps.z
    j = theta.eval(x, y)
    lhs = d * (j.vxx - e * e * j.vyy)
    rhs = spec.c ** 2 * cmath.exp(2 * d * j.v) - spec.cbar ** 2 * cmath.exp(-2 * d * j.v)
    return lhs - rhs


def _auto_rhs(d: complex, f: complex, g: Jet2):
    """(f_x, f_y) implied by the auto-BT system at a point."""
    sf, cf = cmath.sinh(d * f), cmath.cosh(d * f)
    sg, cg = cmath.sinh(d * g.v), cmath.cosh(d * g.v)
    fx = g.vy + 2 / d * sf * cg
    fy = g.vx + 2 / d * cf * sg
    return fx, fy, sf, cf, sg, cg


def auto_bt_residuals(f: Solution, g: Solution, delta, x: float, y: float) -> tuple[complex, complex]:
    d = UnitParam.parse(delta).z
    fj = f.eval(x, y)
    gj = g.eval(x, y)
    r1 = d * fj.vx - d * gj.vy - 2 * cmath.sinh(d * fj.v) * cmath.cosh(d * gj.v)
    r2 = d * fj.vy - d * gj.vx - 2 * cmath.cosh(d * fj.v) * cmath.sinh(d * gj.v)
    return r1, r2


# ---------------------------------------------------------------------------
# integrator
# ---------------------------------------------------------------------------


@dataclass
class AutoBTConfig:
    delta: UnitParam
    g: Solution
    f00: complex = 0j

    def __post_init__(self):
        self.delta = UnitParam.parse(self.delta)
        self.f00 = complex(self.f00)


@dataclass
class BTGrid:
    """f sampled on a rectangular grid; arrays are indexed [iy, ix]."""

    xs: np.ndarray
    ys: np.ndarray
    f: np.ndarray
    fx: np.ndarray
    fy: np.ndarray
    delta: UnitParam
    order: str = "xy"

    def node_jet(self, ix: int, iy: int) -> Jet2:
        """Jet at a node: first derivatives from the integrated state, second ones by FD."""
        fxx = fxy = fyy = complex("nan")
        if 0 < ix < len(self.xs) - 1:
            h = self.xs[ix + 1] - self.xs[ix]
            fxx = (self.f[iy, ix + 1] - 2 * self.f[iy, ix] + self.f[iy, ix - 1]) / (h * h)
        if 0 < iy < len(self.ys) - 1:
            h = self.ys[iy + 1] - self.ys[iy]
            fyy = (self.f[iy + 1, ix] - 2 * self.f[iy, ix] + self.f[iy - 1, ix]) / (h * h)
            fxy = (self.fx[iy + 1, ix] - self.fx[iy - 1, ix]) / (2 * h)
        return Jet2(self.f[iy, ix], self.fx[iy, ix], self.fy[iy, ix], fxx, fxy, fyy)

    def as_solution(self) -> Solution:
        """Solution defined at grid nodes only (other points raise ValueError)."""

        def locate(v, arr):
            i = int(np.argmin(np.abs(arr - v)))
            if abs(arr[i] - v) > 1e-12 * max(1.0, abs(v)):
                raise ValueError(f"{v} is not a grid node")
            return i

        def ev(x, y):
            return self.node_jet(locate(x, self.xs), locate(y, self.ys))

        return Solution(ev, "bt_grid", {"order": self.order}, spec=bt_spec(self.delta))

    def to_json(self) -> dict:
        return {"x": self.xs.tolist(), "y": self.ys.tolist(),
                "re_f": self.f.real.tolist(), "im_f": self.f.imag.tolist(), "order": self.order}


def _march(rhs, t_end: float, state0, t_eval, rtol, atol, where):
    """Integrate from 0 to t_end, returning states at t_eval (ordered like t_eval)."""
    if t_end == 0.0 or len(t_eval) == 0:
        return np.array([state0] * len(t_eval)).T if len(t_eval) else np.zeros((len(state0), 0))
    try:
        sol = solve_ivp(rhs, (0.0, t_end), np.asarray(state0, dtype=complex), method="DOP853",
                        t_eval=t_eval, rtol=rtol, atol=atol)
    except SingularPoint as exc:
        raise SingularityEncountered(f"seed singular along {where}: {exc}", point=where) from None
    if sol.status != 0 or sol.y.shape[1] != len(t_eval):
        reached = sol.t[-1] if len(sol.t) else 0.0
        cls = StepSizeUnderflow if "step size" in str(sol.message).lower() else SingularityEncountered
        raise cls(f"integration along {where} stopped near t={reached}: {sol.message}",
                  point=(where, reached))
    if not np.all(np.isfinite(sol.y)):
        raise SingularityEncountered(f"non-finite state along {where}", point=where)
    return sol.y


def _leg_split(ts: np.ndarray):
    pos = [i for i, t in enumerate(ts) if t > 0]
    neg = [i for i, t in enumerate(ts) if t < 0]
    zero = [i for i, t in enumerate(ts) if t == 0]
    return pos, neg[::-1], zero


def bt_integrate(cfg: AutoBTConfig, region, nx: int, ny: int, order: str = "xy",
                 rtol: float = 1e-11, atol: float = 1e-12, threads: int | None = None) -> BTGrid:
    """Sample the auto-BT image f of the seed ``cfg.g`` on a grid.

    order "xy": integrate f_x along y = 0 from f(0, 0) = f00, then for each grid
    x integrate (f, f_x) in y.  Along those lines f_x evolves by the
    x-derivative of the second transformation equation, so the first equation
    is left as an independent check on the output.  Order "yx" swaps the
    roles.  ``region`` = (x0, x1, y0, y1) must contain the origin.
    """
    x0, x1, y0, y1 = map(float, region)
    if not (x0 <= 0 <= x1 and y0 <= 0 <= y1):
        raise ValueError("region must contain the origin")
    if order not in ("xy", "yx"):
        raise ValueError("order must be 'xy' or 'yx'")
    xs = np.linspace(x0, x1, nx)
    ys = np.linspace(y0, y1, ny)
    d = cfg.delta.z
    g = cfg.g

    if order == "xy":
        axis0, axis1 = xs, ys
    else:
        axis0, axis1 = ys, xs

    def at(t0, t1):
        # (t0 along the first axis, t1 along the second) -> (x, y)
        return (t0, t1) if order == "xy" else (t1, t0)

    def first_rhs(t, s):
        x, y = at(t, 0.0)
        gj = g.eval(x, y)
        fx, fy, *_ = _auto_rhs(d, s[0], gj)
        return [fx if order == "xy" else fy]

    # first leg along the axis through the origin
    f_axis = np.empty(len(axis0), dtype=complex)
    pos, neg, zero = _leg_split(axis0)
    for i in zero:
        f_axis[i] = cfg.f00
    for idx, end in ((pos, axis0[-1]), (neg, axis0[0])):
        if idx:
            ys_ = _march(first_rhs, end, [cfg.f00], axis0[idx], rtol, atol,
                         f"first leg ({order[0]})")
            f_axis[idx] = ys_[0]

    def second_leg(i0):
        t0 = axis0[i0]
        x, y = at(t0, 0.0)
        gj = g.eval(x, y)
        fx, fy, *_ = _auto_rhs(d, f_axis[i0], gj)
        # carried slope: the derivative along the first axis
        slope0 = fx if order == "xy" else fy

        def rhs(t, s):
            f, p = s
            x, y = at(t0, t)
            gj = g.eval(x, y)
            fx, fy, sf, cf, sg, cg = _auto_rhs(d, f, gj)
            if order == "xy":
                # f_y from the second equation; p = f_x is carried along so the
                # first equation stays an independent check
                return [fy, _px_y(gj, p, fy, sf, cf, sg, cg)]
            return [fx, _py_x(gj, p, fx, sf, cf, sg, cg)]

        out_f = np.empty(len(axis1), dtype=complex)
        out_p = np.empty(len(axis1), dtype=complex)
        pos1, neg1, zero1 = _leg_split(axis1)
        for j in zero1:
            out_f[j] = f_axis[i0]
            out_p[j] = slope0
        for idx, end in ((pos1, axis1[-1]), (neg1, axis1[0])):
            if idx:
                st = _march(rhs, end, [f_axis[i0], slope0], axis1[idx], rtol, atol,
                            f"second leg at {order[0]}={t0:.6g}")
                out_f[idx] = st[0]
                out_p[idx] = st[1]
        return out_f, out_p

    n = threads if threads is not None else thread_count()
    if n > 1:
        with ThreadPoolExecutor(max_workers=n) as ex:
            legs = list(ex.map(second_leg, range(len(axis0))))
    else:
        legs = [second_leg(i) for i in range(len(axis0))]

    F = np.empty((ny, nx), dtype=complex)
    FX = np.empty((ny, nx), dtype=complex)
    FY = np.empty((ny, nx), dtype=complex)
    for i0, (lf, lp) in enumerate(legs):
        for j, (fv, pv) in enumerate(zip(lf, lp)):
            if order == "xy":
                ix, iy = i0, j
            else:
                ix, iy = j, i0
            gj = g.eval(xs[ix], ys[iy])
            fx, fy, *_ = _auto_rhs(d, fv, gj)
            F[iy, ix] = fv
            if order == "xy":
                FX[iy, ix] = pv
                FY[iy, ix] = fy
            else:
                FX[iy, ix] = fx
                FY[iy, ix] = pv
    return BTGrid(xs, ys, F, FX, FY, cfg.delta, order)


def _px_y(gj: Jet2, p, fy, sf, cf, sg, cg):
    """y-derivative of p = f_x, written as d/dx of f_y = g_x + (2/delta) cosh(delta f) sinh(delta g)."""
    return gj.vxx + 2 * sf * sg * p + 2 * cf * cg * gj.vx


def _py_x(gj: Jet2, q, fx, sf, cf, sg, cg):
    """x-derivative of q = f_y, written as d/dy of f_x = g_y + (2/delta) sinh(delta f) cosh(delta g)."""
    return gj.vyy + 2 * cf * cg * q + 2 * sf * sg * gj.vy


def bt_residual_grid(grid: BTGrid, g: Solution) -> np.ndarray:
    """max(|r1|, |r2|) of the auto-BT system at each node, using the integrated slopes."""
    d = grid.delta.z
    out = np.empty(grid.f.shape)
    for iy, y in enumerate(grid.ys):
        for ix, x in enumerate(grid.xs):
            gj = g.eval(x, y)
            f = grid.f[iy, ix]
            r1 = d * grid.fx[iy, ix] - d * gj.vy - 2 * cmath.sinh(d * f) * cmath.cosh(d * gj.v)
            r2 = d * grid.fy[iy, ix] - d * gj.vx - 2 * cmath.cosh(d * f) * cmath.sinh(d * gj.v)
            out[iy, ix] = max(abs(r1), abs(r2))
    return out


def fd_pde_residual_grid(grid: BTGrid) -> np.ndarray:
    """Relative residual of delta (f_xx - f_yy) = 2 sinh(2 delta f) by 4th-order
    central differences; boundary rows/columns (two deep) are NaN."""
    f = grid.f
    hx = grid.xs[1] - grid.xs[0]
    hy = grid.ys[1] - grid.ys[0]
    d = grid.delta.z
    out = np.full(f.shape, np.nan)
    c = f[2:-2, 2:-2]
    fxx = (-f[2:-2, 4:] + 16 * f[2:-2, 3:-1] - 30 * c + 16 * f[2:-2, 1:-3] - f[2:-2, :-4]) / (12 * hx * hx)
    fyy = (-f[4:, 2:-2] + 16 * f[3:-1, 2:-2] - 30 * c + 16 * f[1:-3, 2:-2] - f[:-4, 2:-2]) / (12 * hy * hy)
    lhs = d * (fxx - fyy)
    rhs = 2 * np.sinh(2 * d * c)
    out[2:-2, 2:-2] = np.abs(lhs - rhs) / np.maximum(np.maximum(np.abs(lhs), np.abs(rhs)), 1.0)
    return out


def path_consistency(cfg: AutoBTConfig, region, nx: int, ny: int, **kw) -> float:
    """max |f_xy - f_yx| over the grid (modulo the imaginary period of f)."""
    a = bt_integrate(cfg, region, nx, ny, order="xy", **kw)
    b = bt_integrate(cfg, region, nx, ny, order="yx", **kw)
    return float(np.max(np.abs(_mod_period(a.f - b.f, cfg.delta))))


def _mod_period(diff, delta):
    """Reduce differences of f modulo its period 2 pi i / delta."""
    P = 2j * math.pi / UnitParam.parse(delta).z
    q = np.asarray(diff) / P
    return np.asarray(diff) - np.round(q.real) * P


# ---------------------------------------------------------------------------
# closed forms: family tanh(delta g / 2) = delta F(x) G(y)
# ---------------------------------------------------------------------------


@dataclass
class Prop6Params:
    """Seed tanh(delta g/2) = delta F(x) G(y) with G(0) = 1, G'(0) = 0."""

    F: Function1D
    G: Function1D
    c0: complex

    def __post_init__(self):
        g0, g1, _ = self.G.eval(0.0)
        if abs(g0 - 1) > 1e-12 or abs(g1) > 1e-12:
            raise ConstraintViolated(f"need G(0) = 1 and G'(0) = 0, got {g0}, {g1}",
                                     residual=max(abs(g0 - 1), abs(g1)))
        self.c0 = complex(self.c0)

    @classmethod
    def from_f00(cls, F, G, f00, delta) -> "Prop6Params":
        return cls(F, G, cmath.tanh(UnitParam.parse(delta).z * complex(f00) / 2))


def _lambda_jet(F: Function1D, x: float) -> Jet2:
    """Jet in x of lambda = F'/F."""
    v, d1, d2, d3 = F.derivs(x)[:4]
    if abs(v) <= 1e-14:
        raise SingularPoint("lambda = F'/F at a zero of F")
    l0 = d1 / v
    l1 = d2 / v - l0 * l0
    l2 = d3 / v - 3 * d1 * d2 / (v * v) + 2 * l0 ** 3
    return Jet2.from_x(l0, l1, l2)


def prop6_solution(p: Prop6Params, delta, form: str = "corrected",
                   q: QuadratureSpec | None = None) -> Solution:
    """Auto-BT image of a tanh-family seed.

    With lambda = F'/F, Lambda = sqrt(4 - lambda^2), t = c0 exp(2X) and
    Y = integral_0^y 2 F G(s) / (1 - delta^2 F^2 G(s)^2) ds:

    * ``"corrected"``: X = integral_0^x (1 + delta^2 F^2)/(1 - delta^2 F^2),
      T = tan(delta Lambda Y / 2),
      tanh(delta f/2) = ((2 + lambda) T + Lambda t) / (Lambda + (lambda - 2) T t)
    * ``"statement"``: X without the delta^2 factors and T = tanh(Lambda Y)
    * ``"proof"``: X without delta^2 and
      tanh(delta f/2) = s/(lambda-2) tanh(delta s Y/2 + arctanh((lambda-2) t/s)),
      s = sqrt(lambda^2 - 4).
    """
    delta = UnitParam.parse(delta)
    d = delta.z
    d2 = unit_square(delta) if form == "corrected" else 1
    F, G, c0 = p.F, p.G, p.c0

    def xint_jet(x):
        Fj = F.jet_x(x)
        F2 = Fj * Fj * d2
        return (F2 + 1) / (1 - F2)

    def xint(t):
        f2 = F.eval(t)[0] ** 2 * d2
        return (1 + f2) / (1 - f2)

    X_int = CumulativeIntegral(xint, 0.0, q)

    def h(x, s):
        Fj = F.jet_x(x)
        Gj = G.jet_y(s)
        FG = Fj * Gj
        return FG * 2 / (1 - FG * FG * (d * d))

    def ratio(x, y):
        lam = _lambda_jet(F, x)
        xi = xint_jet(x)
        X = Jet2.from_x(X_int(x), xi.v, xi.vx)
        Y = partial_antiderivative_y(h, x, y, 0.0, q)
        t = jexp(X * 2) * c0
        if form == "proof":
            s = jsqrt(lam * lam - 4)
            inner = Y * s * (d / 2) + jarctanh(t * (lam - 2) / s)
            return s / (lam - 2) * jtanh(inner)
        Lam = jsqrt(4 - lam * lam)
        T = jtan(Lam * Y * (d / 2)) if form == "corrected" else jtanh(Lam * Y)
        return ((lam + 2) * T + Lam * t) / (Lam + (lam - 2) * T * t)

    def ev(x, y):
        return jarctanh(ratio(x, y)) * (2 / d)

    def singular(x, y, margin=1e-6):
        # lambda blows up on the zero set of F
        v, d1, _ = F.eval(x)
        return abs(d1) > 0 and abs(v / d1) < margin

    def potential(x, y):
        return ratio(x, y).v

    if form not in ("corrected", "statement", "proof"):
        raise ValueError(f"unknown form {form!r}")
    return Solution(ev, f"prop6:{form}", {"params": p, "delta": delta}, singular, potential,
                    bt_spec(delta))


def example9_seed(delta) -> tuple[Solution, Function1D, Function1D]:
    """Seed for the tanh-family transformation: F = sinh(k x)/k, G = sec(delta y), k = sqrt(4 - delta^2)."""
    delta = UnitParam.parse(delta)
    g = example5_solution(UnitParam.ONE, delta)
    return g, g.params["F"], g.params["G"]


def example9_displayed(delta, c0: complex):
    """Closed form exactly as displayed for the worked example (value only).

    lambda = k coth(kx), Lambda = sqrt(4 - lambda^2),
    X = 2 arctanh(sqrt(1+k^2) tanh(kx)/k)/sqrt(1+k^2) - x,
    Y = 2 sinh(kx)/(delta r) arctanh(k sin(delta y)/r), r = sqrt(k^2 - delta^2 sinh^2(kx)),
    tanh(delta w/2) = ((2+lambda) tanh(Y Lambda) + c0 Lambda e^{2X}) /
                      (Lambda + (lambda-2) c0 e^{2X} tanh(Y Lambda)).
    Returns a function (x, y) -> w.
    """
    d = UnitParam.parse(delta).z
    k = math.sqrt(4 - unit_square(UnitParam.parse(delta)))

    def w(x, y):
        lam = k / cmath.tanh(k * x)
        Lam = cmath.sqrt(4 - lam * lam)
        r1 = cmath.sqrt(1 + k * k)
        X = 2 * cmath.atanh(r1 * cmath.tanh(k * x) / k) / r1 - x
        r = cmath.sqrt(k * k - d * d * cmath.sinh(k * x) ** 2)
        Y = 2 * cmath.sinh(k * x) / (d * r) * cmath.atanh(k * cmath.sin(d * y) / r)
        t = c0 * cmath.exp(2 * X)
        T = cmath.tanh(Y * Lam)
        R = ((2 + lam) * T + t * Lam) / (Lam + (lam - 2) * t * T)
        return 2 / d * cmath.atanh(R)

    return w


# ---------------------------------------------------------------------------
# closed forms: family sinh(delta g) = tan(delta (A(x) + B(y)))
# ---------------------------------------------------------------------------


@dataclass
class Prop8Params:
    """Seed sinh(delta g) = tan(delta (A + B)) with A'(0) = 0; f(0, 0) = 0."""

    A: Function1D
    B: Function1D
    A0: complex = field(init=False)

    def __post_init__(self):
        a0, a1, _ = self.A.eval(0.0)
        if abs(a1) > 1e-12:
            raise ConstraintViolated(f"need A'(0) = 0, got {a1}", residual=abs(a1))
        self.A0 = a0


def prop8_solution(p: Prop8Params, delta, form: str = "corrected",
                   q: QuadratureSpec | None = None) -> Solution:
    """Auto-BT image of a tan-family seed with f(0, 0) = 0.

    X(x, y) = integral_0^x sec(delta (A(t) + B(y))) dt and
    Yh(y) = integral_0^y tan(delta (A0 + B(s))) ds.

    * ``"corrected"``: beta = delta B', mu = sqrt(4 + beta^2), t0 = tan(Yh),
      tanh(delta f/2) = (2 + mu tanh(mu X/2 + arctanh((beta t0 - 2)/mu))) / beta
    * ``"statement"``: Y = delta Yh, arctanh((B' tan Y - 2)/mu), denominator B'
    * ``"proof"``: as ``"statement"`` with denominator delta B'.
    """
    delta = UnitParam.parse(delta)
    d = delta.z
    A, B, A0 = p.A, p.B, p.A0
    if form not in ("corrected", "statement", "proof"):
        raise ValueError(f"unknown form {form!r}")

    def yint_jet(y):
        return jtan((B.jet_y(y) + A0) * d)

    Y_int = CumulativeIntegral(lambda s: yint_jet(s).v, 0.0, q)

    def h(t, y):
        return jsec((A.jet_x(t) + B.jet_y(y)) * d)

    def ratio(x, y):
        Bj = B.jet_y(y)
        Bp = Jet2.from_y(Bj.vy, Bj.vyy, B.d3(y))
        yi = yint_jet(y)
        Yh = Jet2.from_y(Y_int(y), yi.v, yi.vy)
        X = partial_antiderivative_x(h, x, y, 0.0, q)
        mu = jsqrt(Bp * Bp * (d * d) + 4)
        if form == "corrected":
            beta = Bp * d
            t0 = jtan(Yh)
            return (jtanh(mu * X * 0.5 + jarctanh((beta * t0 - 2) / mu)) * mu + 2) / beta
        Y = Yh * d
        inner = jtanh(mu * X * 0.5 + jarctanh((Bp * jtan(Y) - 2) / mu)) * mu + 2
        return inner / (Bp if form == "statement" else Bp * d)

    def ev(x, y):
        return jarctanh(ratio(x, y)) * (2 / d)

    def singular(x, y, margin=1e-6):
        b0, b1, b2 = B.eval(y)
        return abs(b2) > 0 and abs(b1 / b2) < margin

    def potential(x, y):
        return ratio(x, y).v

    return Solution(ev, f"prop8:{form}", {"params": p, "delta": delta}, singular, potential,
                    bt_spec(delta))


def example10_seed(printed: bool = False) -> Solution:
    """Seed of the hyperbolic sine-Gordon equation (delta = i) built from
    A = log cos(sqrt2 x), B = -log cosh(sqrt2 y); see
    :func:`solitonforge.separation.example10_solution`."""
    return example10_solution(printed)


def example10_displayed(x: float, y: float) -> complex:
    """Value of the transformed solution exactly as displayed for the worked example:

    m = 1 + sech^2(sqrt2 y), Y = arctanh(tanh(sqrt2 y)/sqrt2) - y,
    X = 2 arctanh(sqrt2 sin(sqrt2 x) cosh(sqrt2 y)/sqrt(3 + cosh(2 sqrt2 y))) / sqrt(3 + cosh(2 sqrt2 y)),
    tan(w/2) = -(2 + sqrt(2m) tanh(sqrt(2m) X/2 + arctanh((sqrt2 tanh(sqrt2 y) tan Y - 2)/sqrt(2m))))
               / (sqrt2 tanh(sqrt2 y)).
    """
    r2 = math.sqrt(2.0)
    m = 1 + 1 / math.cosh(r2 * y) ** 2
    s = cmath.sqrt(2 * m)
    Y = cmath.atanh(math.tanh(r2 * y) / r2) - y
    den = cmath.sqrt(3 + math.cosh(2 * r2 * y))
    X = 2 * cmath.atanh(r2 * math.sin(r2 * x) * math.cosh(r2 * y) / den) / den
    num = 2 + s * cmath.tanh(s * X / 2 + cmath.atanh((r2 * math.tanh(r2 * y) * cmath.tan(Y) - 2) / s))
    return 2 * cmath.atan(-num / (r2 * math.tanh(r2 * y)))


# ---------------------------------------------------------------------------
# discrepancy reports
# ---------------------------------------------------------------------------


def compare_with_integrator(values, grid: BTGrid, g: Solution, exclude=None, tol: float = AGREE_TOL,
                            label: str = "") -> dict:
    """Compare a closed form with an integrated grid.

    ``values(x, y)`` returns the closed-form f (a Solution is accepted too).
    Differences are taken modulo the period of f; nodes where ``exclude``
    holds or where the closed form is singular are skipped and counted.
    """
    if isinstance(values, Solution):
        sol = values
        values = sol.value
    gap = 0.0
    skipped = 0
    failed = 0
    worst = None
    for iy, y in enumerate(grid.ys):
        for ix, x in enumerate(grid.xs):
            if exclude is not None and exclude(x, y):
                skipped += 1
                continue
            try:
                v = complex(values(x, y))
            except (SingularPoint, ZeroDivisionError, ValueError, OverflowError, ArithmeticError):
                failed += 1
                continue
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                failed += 1
                continue
            dv = abs(complex(_mod_period(v - grid.f[iy, ix], grid.delta)))
            if dv > gap:
                gap, worst = dv, (float(x), float(y))
    compared = grid.f.size - skipped - failed
    bt = bt_residual_grid(grid, g)
    pde = fd_pde_residual_grid(grid)
    x0, x1, y0, y1 = grid.xs[0], grid.xs[-1], grid.ys[0], grid.ys[-1]
    verdict = "agree" if compared > 0 and gap <= tol else "disagree"
    notes = (f"{label}: compared {compared} nodes, skipped {skipped} excluded and {failed} singular; "
             f"worst node {worst}; integrator order {grid.order}")
    return {
        "region": [float(x0), float(x1), float(y0), float(y1)],
        "max_closedform_vs_integrator": float(gap) if compared else None,
        "max_bt_residual": float(np.nanmax(bt)),
        "max_pde_residual": float(np.nanmax(pde)) if np.any(np.isfinite(pde)) else None,
        "verdict": verdict,
        "notes": notes,
    }


def prop6_reports(delta="i", f00: float = 0.5, region=(-1.0, 1.0, -1.0, 1.0), nx: int = 41,
                  ny: int = 41, x_margin: float = 0.1) -> list[dict]:
    """Discrepancy reports for the tanh-family example, one per closed-form variant."""
    delta = UnitParam.parse(delta)
    g, F, G = example9_seed(delta)
    cfg = AutoBTConfig(delta, g, f00)
    grid = bt_integrate(cfg, region, nx, ny)
    p = Prop6Params.from_f00(F, G, f00, delta)
    excl = lambda x, y: abs(x) < x_margin  # noqa: E731  (lambda = F'/F is singular at x = 0)
    reports = []
    for form in ("corrected", "statement", "proof"):
        sol = prop6_solution(p, delta, form)
        reports.append(compare_with_integrator(sol, grid, g, excl, label=f"prop6 {form}"))
    reports.append(compare_with_integrator(example9_displayed(delta, p.c0), grid, g, excl,
                                           label="worked-example display"))
    return reports


def prop8_reports(region=(-0.9, 0.9, -1.0, 1.0), nx: int = 37, ny: int = 41,
                  y_margin: float = 0.1) -> list[dict]:
    """Discrepancy reports for the tan-family example (delta = i, f(0, 0) = 0)."""
    delta = UnitParam.IMAG
    g = example10_seed()
    cfg = AutoBTConfig(delta, g, 0.0)
    grid = bt_integrate(cfg, region, nx, ny)
    p = Prop8Params(g.params["A"], g.params["B"])
    excl = lambda x, y: abs(y) < y_margin  # noqa: E731  (division by B'(y), zero at y = 0)
    reports = []
    for form in ("corrected", "statement", "proof"):
        sol = prop8_solution(p, delta, form)
        reports.append(compare_with_integrator(sol, grid, g, excl, label=f"prop8 {form}"))
    reports.append(compare_with_integrator(example10_displayed, grid, g, excl,
                                           label="worked-example display"))
    return reports
