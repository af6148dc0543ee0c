"""Unit parameters, equation specifications and second-order jets.

Every closed-form solution in the package is evaluated through :class:`Jet2`,
a truncated two-variable Taylor expansion that carries the value of a complex
field together with all partial derivatives up to order two.  Arithmetic and
elementary functions on jets propagate derivatives exactly (chain rule to
second order), so PDE residuals never depend on finite differences.

The equation family is

    (delta/eps) (w_xx - eps^2 w_yy) = 2 (a^2 - delta^2 b^2) sinh(2 delta w / eps)

with ``delta, eps`` in ``{1, i}``.
"""

from __future__ import annotations

import cmath
import enum
import math
import os
from dataclasses import dataclass, field
from typing import Any, Callable, NamedTuple

from .errors import DegenerateCoefficient, NonRealCoefficient, SingularPoint

SINGULAR_TOL = 1e-12


class UnitParam(enum.Enum):
    """One of the two admissible units, 1 or i."""

    ONE = "1"
    IMAG = "i"

    @property
    def z(self) -> complex:
        return 1.0 + 0j if self is UnitParam.ONE else 1j

    @classmethod
    def parse(cls, value) -> "UnitParam":
        if isinstance(value, UnitParam):
            return value
        if isinstance(value, str):
            value = value.strip().lower()
            if value in ("1", "one"):
                return cls.ONE
            if value in ("i", "imag", "1j", "j"):
                return cls.IMAG
        elif isinstance(value, (int, float, complex)):
            if value == 1:
                return cls.ONE
            if value == 1j:
                return cls.IMAG
        raise ValueError(f"not a unit parameter: {value!r}")

    @classmethod
    def from_square(cls, sq: int) -> "UnitParam":
        return cls.ONE if sq > 0 else cls.IMAG

    def __str__(self) -> str:
        return self.value


def unit_square(u: UnitParam) -> int:
    return 1 if u is UnitParam.ONE else -1


class Variant(enum.Enum):
    HYPERBOLIC_SINH = "HyperbolicSinh"
    ELLIPTIC_SINE = "EllipticSine"
    HYPERBOLIC_SINE = "HyperbolicSine"
    ELLIPTIC_SINH = "EllipticSinh"


_VARIANTS = {
    (UnitParam.ONE, UnitParam.ONE): Variant.HYPERBOLIC_SINH,
    (UnitParam.ONE, UnitParam.IMAG): Variant.ELLIPTIC_SINE,
    (UnitParam.IMAG, UnitParam.ONE): Variant.HYPERBOLIC_SINE,
    (UnitParam.IMAG, UnitParam.IMAG): Variant.ELLIPTIC_SINH,
}


def classify_variant(delta: UnitParam, eps: UnitParam) -> Variant:
    return _VARIANTS[(UnitParam.parse(delta), UnitParam.parse(eps))]


def check_finite(z: complex, what: str = "value") -> complex:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise SingularPoint(f"non-finite {what}: {z!r}")
    return z


@dataclass(frozen=True)
class EquationSpec:
    """Parameters (delta, eps, a, b) selecting one member of the family."""

    delta: UnitParam
    eps: UnitParam
    a: float
    b: float

    def __post_init__(self):
        object.__setattr__(self, "delta", UnitParam.parse(self.delta))
        object.__setattr__(self, "eps", UnitParam.parse(self.eps))

    @property
    def K(self) -> float:
        """a^2 - delta^2 b^2 (always real)."""
        return self.a * self.a - unit_square(self.delta) * self.b * self.b

    @property
    def mu(self) -> complex:
        return complex(2.0 * self.K)

    @property
    def c(self) -> complex:
        return self.a + self.delta.z * self.b

    @property
    def cbar(self) -> complex:
        return self.a - self.delta.z * self.b

    @property
    def kappa(self) -> complex:
        # exact quotient: (1, i) gives -i; only kappa^2 matters downstream
        return self.delta.z / self.eps.z

    @property
    def variant(self) -> Variant:
        return classify_variant(self.delta, self.eps)

    def rhs_coefficient(self) -> float:
        return 2.0 * self.K

    @classmethod
    def normalized(cls, delta_box, kappa) -> "EquationSpec":
        """Spec equivalent to  w_xx - delta_box^2 w_yy = (2/kappa) sinh(2 kappa w).

        Takes eps = delta_box and picks delta with delta^2 = kappa^2 delta_box^2;
        the resulting delta/eps equals +-kappa and the equation is even in kappa.
        """
        delta_box = UnitParam.parse(delta_box)
        kappa = UnitParam.parse(kappa)
        sq = unit_square(kappa) * unit_square(delta_box)
        return cls(UnitParam.from_square(sq), delta_box, 1.0, 0.0)


class Normalization(NamedTuple):
    scale: float
    kappa: UnitParam
    delta_box: UnitParam


def rescale_to_normalized(spec: EquationSpec) -> Normalization:
    """Scale s with W(X, Y) = w(X/s, Y/s) solving the normalized equation.

    The normalized form is  W_XX - eps^2 W_YY = (2/kappa) sinh(2 kappa W)
    (linear coefficient 4), so the box operator's unit is ``spec.eps``.
    """
    K = spec.K
    if not math.isfinite(K):
        raise NonRealCoefficient(f"a^2 - delta^2 b^2 is not a finite real: {K!r}")
    if K == 0.0:
        raise DegenerateCoefficient("a^2 - delta^2 b^2 = 0: equation is linear")
    if K < 0.0:
        raise NonRealCoefficient(f"a^2 - delta^2 b^2 = {K} < 0 gives an imaginary scale")
    kappa = UnitParam.from_square(unit_square(spec.delta) * unit_square(spec.eps))
    return Normalization(math.sqrt(K), kappa, spec.eps)


@dataclass(frozen=True, slots=True)
class Jet2:
    """Value and partial derivatives up to second order of a field at a point."""

    v: complex
    vx: complex = 0j
    vy: complex = 0j
    vxx: complex = 0j
    vxy: complex = 0j
    vyy: complex = 0j

    @classmethod
    def const(cls, c) -> "Jet2":
        return cls(complex(c))

    @classmethod
    def var_x(cls, x: float) -> "Jet2":
        return cls(complex(x), 1 + 0j)

    @classmethod
    def var_y(cls, y: float) -> "Jet2":
        return cls(complex(y), 0j, 1 + 0j)

    @classmethod
    def from_x(cls, v, d1, d2) -> "Jet2":
        """Lift a 1-D jet in x."""
        return cls(complex(v), complex(d1), 0j, complex(d2), 0j, 0j)

    @classmethod
    def from_y(cls, v, d1, d2) -> "Jet2":
        return cls(complex(v), 0j, complex(d1), 0j, 0j, complex(d2))

    def slots(self) -> tuple:
        return (self.v, self.vx, self.vy, self.vxx, self.vxy, self.vyy)

    def __add__(self, o):
        if isinstance(o, Jet2):
            return Jet2(self.v + o.v, self.vx + o.vx, self.vy + o.vy,
                        self.vxx + o.vxx, self.vxy + o.vxy, self.vyy + o.vyy)
        return Jet2(self.v + o, self.vx, self.vy, self.vxx, self.vxy, self.vyy)

    __radd__ = __add__

    def __neg__(self):
        return Jet2(-self.v, -self.vx, -self.vy, -self.vxx, -self.vxy, -self.vyy)

    def __sub__(self, o):
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, Jet2):
            a, b = self, o
            return Jet2(
                a.v * b.v,
                a.vx * b.v + a.v * b.vx,
                a.vy * b.v + a.v * b.vy,
                a.vxx * b.v + 2 * a.vx * b.vx + a.v * b.vxx,
                a.vxy * b.v + a.vx * b.vy + a.vy * b.vx + a.v * b.vxy,
                a.vyy * b.v + 2 * a.vy * b.vy + a.v * b.vyy,
            )
        return Jet2(self.v * o, self.vx * o, self.vy * o,
                    self.vxx * o, self.vxy * o, self.vyy * o)

    __rmul__ = __mul__

    def __truediv__(self, o):
        if isinstance(o, Jet2):
            return self * jet_apply("reciprocal", o)
        return self * (1.0 / o)

    def __rtruediv__(self, o):
        return jet_apply("reciprocal", self) * o

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Jet2.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def chain(self, f0, f1, f2) -> "Jet2":
        """Jet of f(w) given f(v), f'(v), f''(v)."""
        return Jet2(
            f0,
            f1 * self.vx,
            f1 * self.vy,
            f2 * self.vx * self.vx + f1 * self.vxx,
            f2 * self.vx * self.vy + f1 * self.vxy,
            f2 * self.vy * self.vy + f1 * self.vyy,
        )

    def is_finite(self) -> bool:
        return all(math.isfinite(s.real) and math.isfinite(s.imag) for s in self.slots())


def _near(z: complex, target: complex) -> bool:
    return abs(z - target) <= SINGULAR_TOL


def _d_exp(v):
    e = cmath.exp(v)
    return e, e, e


def _d_log(v):
    if _near(v, 0):
        raise SingularPoint("log at 0")
    return cmath.log(v), 1 / v, -1 / (v * v)


def _d_sqrt(v):
    if _near(v, 0):
        raise SingularPoint("sqrt branch point at 0")
    s = cmath.sqrt(v)
    return s, 0.5 / s, -0.25 / (s * s * s)


def _d_sin(v):
    s, c = cmath.sin(v), cmath.cos(v)
    return s, c, -s


def _d_cos(v):
    s, c = cmath.sin(v), cmath.cos(v)
    return c, -s, -c


def _d_tan(v):
    if _near(cmath.cos(v), 0):
        raise SingularPoint("tan pole")
    t = cmath.tan(v)
    d = 1 + t * t
    return t, d, 2 * t * d


def _d_sec(v):
    c = cmath.cos(v)
    if _near(c, 0):
        raise SingularPoint("sec pole")
    s, t = 1 / c, cmath.tan(v)
    return s, s * t, s * (t * t + s * s)


def _d_cot(v):
    if _near(cmath.sin(v), 0):
        raise SingularPoint("cot pole")
    c = 1 / cmath.tan(v)
    d = -(1 + c * c)
    return c, d, -2 * c * d


def _d_sinh(v):
    s, c = cmath.sinh(v), cmath.cosh(v)
    return s, c, s


def _d_cosh(v):
    s, c = cmath.sinh(v), cmath.cosh(v)
    return c, s, c


def _d_tanh(v):
    if _near(cmath.cosh(v), 0):
        raise SingularPoint("tanh pole")
    t = cmath.tanh(v)
    d = 1 - t * t
    return t, d, -2 * t * d


def _d_sech(v):
    c = cmath.cosh(v)
    if _near(c, 0):
        raise SingularPoint("sech pole")
    s, t = 1 / c, cmath.tanh(v)
    return s, -s * t, s * (t * t - s * s)


def _d_coth(v):
    if _near(cmath.sinh(v), 0):
        raise SingularPoint("coth pole")
    c = 1 / cmath.tanh(v)
    d = 1 - c * c
    return c, d, -2 * c * d


def _d_arctan(v):
    if _near(v, 1j) or _near(v, -1j):
        raise SingularPoint("arctan branch point")
    d = 1 / (1 + v * v)
    return cmath.atan(v), d, -2 * v * d * d


def _d_arctanh(v):
    if _near(v, 1) or _near(v, -1):
        raise SingularPoint("arctanh branch point")
    d = 1 / (1 - v * v)
    return cmath.atanh(v), d, 2 * v * d * d


def _d_arcsin(v):
    if _near(v, 1) or _near(v, -1):
        raise SingularPoint("arcsin branch point")
    r = cmath.sqrt(1 - v * v)
    return cmath.asin(v), 1 / r, v / (r * r * r)


def _d_arcsinh(v):
    if _near(v, 1j) or _near(v, -1j):
        raise SingularPoint("arcsinh branch point")
    r = cmath.sqrt(1 + v * v)
    return cmath.asinh(v), 1 / r, -v / (r * r * r)


def _d_reciprocal(v):
    if _near(v, 0):
        raise SingularPoint("division by zero")
    r = 1 / v
    return r, -r * r, 2 * r * r * r


def _d_square(v):
    return v * v, 2 * v, 2 + 0j


_DERIVS: dict[str, Callable[[complex], tuple]] = {
    "exp": _d_exp,
    "log": _d_log,
    "sqrt": _d_sqrt,
    "sin": _d_sin,
    "cos": _d_cos,
    "tan": _d_tan,
    "sec": _d_sec,
    "cot": _d_cot,
    "sinh": _d_sinh,
    "cosh": _d_cosh,
    "tanh": _d_tanh,
    "sech": _d_sech,
    "coth": _d_coth,
    "arctan": _d_arctan,
    "arctanh": _d_arctanh,
    "arcsin": _d_arcsin,
    "arcsinh": _d_arcsinh,
    "reciprocal": _d_reciprocal,
    "square": _d_square,
}

ELEMENTARY = tuple(sorted(_DERIVS))


def scalar_apply(tag: str, v: complex) -> complex:
    """Plain (jet-free) evaluation of an elementary function."""
    return _DERIVS[tag](complex(v))[0]


def jet_apply(tag: str, j: Jet2) -> Jet2:
    """Jet of ``tag(w)``; raises SingularPoint at poles and branch points."""
    try:
        fn = _DERIVS[tag]
    except KeyError:
        raise ValueError(f"unknown elementary function {tag!r}") from None
    try:
        f0, f1, f2 = fn(complex(j.v))
    except (ZeroDivisionError, OverflowError, ValueError) as exc:
        raise SingularPoint(f"{tag} at {j.v!r}: {exc}") from None
    return j.chain(f0, f1, f2)


# shorthand used by the solution modules
def jexp(j): return jet_apply("exp", j)
def jlog(j): return jet_apply("log", j)
def jsqrt(j): return jet_apply("sqrt", j)
def jsin(j): return jet_apply("sin", j)
def jcos(j): return jet_apply("cos", j)
def jtan(j): return jet_apply("tan", j)
def jsec(j): return jet_apply("sec", j)
def jsinh(j): return jet_apply("sinh", j)
def jcosh(j): return jet_apply("cosh", j)
def jtanh(j): return jet_apply("tanh", j)
def jsech(j): return jet_apply("sech", j)
def jarctan(j): return jet_apply("arctan", j)
def jarctanh(j): return jet_apply("arctanh", j)
def jarcsin(j): return jet_apply("arcsin", j)
def jarcsinh(j): return jet_apply("arcsinh", j)


def thread_count() -> int:
    """Worker threads for grid work, from SOLITONFORGE_THREADS (default 1)."""
    try:
        return max(1, int(os.environ.get("SOLITONFORGE_THREADS", "1")))
    except ValueError:
        return 1


def zero_set_distance(phi: Jet2) -> float:
    """First-order estimate |phi| / |grad phi| of the distance to {phi = 0}."""
    g = math.hypot(abs(phi.vx), abs(phi.vy))
    a = abs(phi.v)
    if g == 0.0:
        return math.inf if a > 0 else 0.0
    return a / g


def _never_singular(x: float, y: float, margin: float = 1e-6) -> bool:
    return False


@dataclass(frozen=True)
class Solution:
    """A closed-form (or quadrature-defined) field evaluated as jets.

    ``singular(x, y, margin)`` reports whether (x, y) lies within ``margin``
    (coordinate distance, first-order estimate for curved sets) of the set
    where the closed form blows up or meets a branch point.
    """

    eval_fn: Callable[[float, float], Jet2]
    family: str
    params: dict = field(default_factory=dict)
    singular_fn: Callable[..., bool] = _never_singular
    potential_fn: Callable[[float, float], complex] | None = None
    spec: EquationSpec | None = None

    def eval(self, x: float, y: float) -> Jet2:
        return self.eval_fn(float(x), float(y))

    def value(self, x: float, y: float) -> complex:
        return self.eval(x, y).v

    def singular_set(self, x: float, y: float, margin: float = 1e-6) -> bool:
        try:
            return bool(self.singular_fn(float(x), float(y), margin))
        except SingularPoint:
            return True

    def potential(self, x: float, y: float) -> complex:
        """Branch-free representation (e.g. tanh(kappa w / 2)) when available."""
        if self.potential_fn is None:
            raise AttributeError(f"{self.family} exposes no potential representation")
        return self.potential_fn(float(x), float(y))


def zero_solution(family: str = "zero") -> Solution:
    return Solution(lambda x, y: Jet2.const(0), family)


def jet_solution(fn: Callable[[Jet2, Jet2], Jet2], family: str, params: dict | None = None,
                 singular_fn=_never_singular, potential_fn=None,
                 spec: EquationSpec | None = None) -> Solution:
    """Build a Solution from a jet-level expression in x and y."""

    def ev(x, y):
        return fn(Jet2.var_x(x), Jet2.var_y(y))

    return Solution(ev, family, dict(params or {}), singular_fn, potential_fn, spec)


def describe(obj: Any) -> Any:
    """JSON-friendly rendering of complex numbers and unit params."""
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, UnitParam):
        return obj.value
    if isinstance(obj, dict):
        return {k: describe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [describe(v) for v in obj]
    return obj
