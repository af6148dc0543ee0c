"""Jacobi elliptic functions and adaptive Gauss-Kronrod quadrature.

The elliptic functions use the parameter convention ``m = k**2``.

Quadrature handles real, complex and vector-valued integrands; integrals
whose upper limit moves (the X and Y maps of the auto-Backlund families) go
through :class:`CumulativeIntegral`, which caches knots so a sweep along a
grid line only integrates the new panel each time.
"""

from __future__ import annotations

import heapq
import math
import threading
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np
from scipy.integrate import solve_ivp

from .core import Jet2
from .errors import ModulusOutOfRange, SingularIntegrand, ToleranceNotMet

# ---------------------------------------------------------------------------
# Jacobi elliptic functions
# ---------------------------------------------------------------------------

AGM_MAX_ITER = 32


def _jacobi_ode(u: float, m: float):
    """Reference integration of sn' = cn dn, cn' = -sn dn, dn' = -m sn cn."""

    def rhs(_, s):
        sn, cn, dn = s
        return [cn * dn, -sn * dn, -m * sn * cn]

    if u == 0.0:
        return 0.0, 1.0, 1.0
    sol = solve_ivp(rhs, (0.0, u), [0.0, 1.0, 1.0], method="DOP853", rtol=1e-13, atol=1e-14)
    sn, cn, dn = sol.y[:, -1]
    return float(sn), float(cn), float(dn)


def jacobi_sn_cn_dn(u: float, m: float) -> tuple[float, float, float]:
    """Return (sn, cn, dn)(u | m) by the descending Landen / AGM scheme.

    ``m`` is the parameter (k squared) and must lie in [0, 1].
    """
    u = float(u)
    m = float(m)
    if not (0.0 <= m <= 1.0) or math.isnan(m):
        raise ModulusOutOfRange(f"parameter m={m} outside [0, 1]")
    if m == 0.0:
        return math.sin(u), math.cos(u), 1.0
    if m == 1.0:
        s = 1.0 / math.cosh(u)
        return math.tanh(u), s, s

    a = [1.0]
    c = [math.sqrt(m)]
    b = math.sqrt(1.0 - m)
    for _ in range(AGM_MAX_ITER):
        an, bn = a[-1], b
        a.append(0.5 * (an + bn))
        c.append(0.5 * (an - bn))
        b = math.sqrt(an * bn)
        if abs(c[-1]) <= 1e-16 * a[-1]:
            break
    else:
        return _jacobi_ode(u, m)

    n = len(a) - 1
    phi = (2.0 ** n) * a[n] * u
    phis = [phi]
    for j in range(n, 0, -1):
        phi = 0.5 * (phi + math.asin(c[j] * math.sin(phi) / a[j]))
        phis.append(phi)
    phi0 = phis[-1]
    sn = math.sin(phi0)
    cn = math.cos(phi0)
    # 1 - m sn^2 rewritten without cancellation; dn > 0 for m < 1
    dn = math.sqrt(cn * cn + (1.0 - m) * sn * sn)
    return sn, cn, dn


# ---------------------------------------------------------------------------
# Adaptive Gauss-Kronrod (7, 15)
# ---------------------------------------------------------------------------

_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

# full 15 abscissae on [-1, 1] and matching weights
_NODES = np.concatenate([-_XGK[:-1], [0.0], _XGK[-2::-1]])
_KW = np.concatenate([_WGK[:-1], [_WGK[-1]], _WGK[-2::-1]])
_GW = np.zeros(15)
# the Gauss nodes are the odd-indexed Kronrod abscissae (x1, x3, x5, 0)
for _i, _w in zip((1, 3, 5), _WG[:3]):
    _GW[_i] = _w
    _GW[14 - _i] = _w
_GW[7] = _WG[3]


@dataclass(frozen=True)
class QuadratureSpec:
    abs_tol: float = 1e-13
    rel_tol: float = 1e-12
    max_depth: int = 50

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("tolerances must be positive")
        if self.max_depth < 10:
            raise ValueError("max_depth must be at least 10")


DEFAULT_QUAD = QuadratureSpec()


class QuadResult(NamedTuple):
    value: complex | np.ndarray
    error: float


def _gk15(f, a: float, b: float):
    """One GK15 panel; the error estimate follows the QUADPACK heuristic
    (|K - G| rescaled by the panel's absolute variation)."""
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    try:
        vals = [np.asarray(f(float(c + h * t)), dtype=complex) for t in _NODES]
    except ZeroDivisionError as exc:
        raise SingularIntegrand(f"integrand divided by zero on [{a!r}, {b!r}]") from exc
    for t, v in zip(_NODES, vals):
        if not np.all(np.isfinite(v)):
            raise SingularIntegrand(f"integrand not finite at t={c + h * t!r}")
    vals = np.array(vals)
    k = h * np.tensordot(_KW, vals, axes=1)
    g = h * np.tensordot(_GW, vals, axes=1)
    hk = abs(h)
    raw = np.abs(k - g)
    mean = k / (2 * h)
    resasc = hk * np.tensordot(_KW, np.abs(vals - mean), axes=1)
    resabs = hk * np.tensordot(_KW, np.abs(vals), axes=1)
    with np.errstate(divide="ignore", invalid="ignore"):
        scaled = np.where((resasc != 0) & (raw != 0),
                          resasc * np.minimum(1.0, (200 * raw / np.where(resasc == 0, 1, resasc)) ** 1.5),
                          raw)
    scaled = np.maximum(scaled, 50 * np.finfo(float).eps * resabs)
    err = float(np.max(scaled))
    return k, err


def adaptive_quad(f: Callable, a: float, b: float, q: QuadratureSpec | None = None) -> QuadResult:
    """Integrate ``f`` over [a, b] by globally adaptive GK15 bisection.

    ``f`` may return a complex scalar or a 1-D array (integrated componentwise).
    Each panel's error estimate comes from |Kronrod - Gauss| (QUADPACK
    scaling); the panel with the largest error is split until the summed estimate meets
    ``max(abs_tol, rel_tol * |I|)``.
    """
    q = q or DEFAULT_QUAD
    a = float(a)
    b = float(b)
    if a == b:
        v0 = np.asarray(f(a), dtype=complex)
        return QuadResult(np.zeros_like(v0) if v0.ndim else 0j, 0.0)

    k, e = _gk15(f, a, b)
    # heap of (-err, counter, a, b, depth, value)
    heap = [(-e, 0, a, b, 0, k)]
    total = k
    total_err = e
    counter = 1
    while True:
        scale = float(np.max(np.abs(total))) if np.ndim(total) else abs(total)
        if total_err <= max(q.abs_tol, q.rel_tol * scale):
            break
        neg_e, _, lo, hi, depth, val = heapq.heappop(heap)
        if depth >= q.max_depth:
            raise ToleranceNotMet(
                f"adaptive_quad reached max_depth={q.max_depth} on [{lo}, {hi}]",
                estimate=total, error=total_err)
        mid = 0.5 * (lo + hi)
        k1, e1 = _gk15(f, lo, mid)
        k2, e2 = _gk15(f, mid, hi)
        total = total - val + k1 + k2
        total_err = total_err + neg_e + e1 + e2
        heapq.heappush(heap, (-e1, counter, lo, mid, depth + 1, k1))
        heapq.heappush(heap, (-e2, counter + 1, mid, hi, depth + 1, k2))
        counter += 2
    # recompute the error sum to shed accumulated rounding in the running total
    total_err = sum(-item[0] for item in heap)
    if np.ndim(total) == 0:
        total = complex(total)
    return QuadResult(total, float(total_err))


def quad_value(f: Callable, a: float, b: float, q: QuadratureSpec | None = None):
    return adaptive_quad(f, a, b, q).value


class CumulativeIntegral:
    """t -> integral of f from t0 to t, with knot caching.

    Knots sit on the fixed lattice t0 + k*panel.  Panel integrals and their
    prefix sums are cached, so an evaluation costs one partial panel plus
    whatever panels are new.  Because the lattice does not depend on the order
    of calls, results are bit-identical whichever thread asks first; a lock
    guards the tables.  Results (and quadrature failures) are memoized per t.
    """

    def __init__(self, f: Callable, t0: float = 0.0, q: QuadratureSpec | None = None,
                 panel: float = 0.125):
        self.f = f
        self.t0 = float(t0)
        self.q = q or DEFAULT_QUAD
        self.panel = float(panel)
        # prefix[k] = integral from t0 to t0 + k*panel (k may be negative)
        self._prefix: dict[int, object] = {}
        self._blocked: dict[int, tuple] = {}
        self._memo: dict[float, object] = {}
        self._lock = threading.Lock()

    def _knot(self, k: int) -> float:
        return self.t0 + k * self.panel

    def _prefix_at(self, k: int):
        if k in self._prefix:
            return self._prefix[k]
        if k == 0:
            v = np.asarray(self.f(self.t0), dtype=complex)
            self._prefix[0] = np.zeros_like(v) if v.ndim else 0j
            return self._prefix[0]
        step = 1 if k > 0 else -1
        blocked = self._blocked.get(step)
        if blocked is not None and abs(k) >= abs(blocked[0]):
            raise blocked[1]
        j = 0
        while (j + step) in self._prefix and j != k:
            j += step
        acc = self._prefix_at(j) if j == 0 else self._prefix[j]
        while j != k:
            try:
                part = adaptive_quad(self.f, self._knot(j), self._knot(j + step), self.q).value
            except (SingularIntegrand, ToleranceNotMet) as exc:
                # every later knot in this direction integrates across the same panel
                self._blocked[step] = (j + step, exc)
                raise
            acc = acc + part
            j += step
            self._prefix[j] = acc
        return acc

    def __call__(self, t: float):
        t = float(t)
        with self._lock:
            hit = self._memo.get(t)
        if hit is not None:
            if isinstance(hit, Exception):
                raise hit
            return hit
        k = int(math.trunc((t - self.t0) / self.panel))
        try:
            with self._lock:
                base = self._prefix_at(k)
            tk = self._knot(k)
            out = base if t == tk else base + adaptive_quad(self.f, tk, t, self.q).value
        except (SingularIntegrand, ToleranceNotMet) as exc:
            out = exc
        with self._lock:
            self._memo[t] = out
        if isinstance(out, Exception):
            raise out
        return out


def antiderivative_jet(integrand: Callable[[float], tuple], x: float, a: float = 0.0,
                       q: QuadratureSpec | None = None, value=None) -> Jet2:
    """Jet in x of  X(x) = integral_a^x f(t) dt.

    ``integrand(t)`` returns ``(f, f')`` (extra entries ignored).  The value
    slot comes from quadrature (or ``value`` if the caller has it cached); the
    derivative slots come from the fundamental theorem of calculus.
    """
    if value is None:
        value = adaptive_quad(lambda t: integrand(t)[0], a, x, q).value
    f0, f1 = integrand(x)[:2]
    return Jet2.from_x(value, f0, f1)


def partial_antiderivative_y(h: Callable[[float, float], Jet2], x: float, y: float,
                             y0: float = 0.0, q: QuadratureSpec | None = None) -> Jet2:
    """Jet of Y(x, y) = integral_{y0}^y h(x, s) ds.

    ``h(x, s)`` returns the jet of the integrand.  Y, Y_x and Y_xx are
    quadratures of (h, h_x, h_xx); the remaining slots follow from the
    fundamental theorem of calculus.
    """

    def comp(s):
        j = h(x, s)
        return np.array([j.v, j.vx, j.vxx])

    I = adaptive_quad(comp, y0, y, q).value
    hj = h(x, y)
    return Jet2(complex(I[0]), complex(I[1]), hj.v, complex(I[2]), hj.vx, hj.vy)


def partial_antiderivative_x(h: Callable[[float, float], Jet2], x: float, y: float,
                             x0: float = 0.0, q: QuadratureSpec | None = None) -> Jet2:
    """Jet of X(x, y) = integral_{x0}^x h(t, y) dt (mirror of the y version)."""

    def comp(t):
        j = h(t, y)
        return np.array([j.v, j.vy, j.vyy])

    I = adaptive_quad(comp, x0, x, q).value
    hj = h(x, y)
    return Jet2(complex(I[0]), hj.v, complex(I[1]), hj.vx, hj.vy, complex(I[2]))
