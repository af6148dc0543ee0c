"""Residual engine: PDE residuals from jets, grid scans, reality checks and
finite-difference cross-validation of the jet machinery."""

from __future__ import annotations

import cmath
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .core import EquationSpec, Jet2, Solution, thread_count
from .errors import (AllPointsExcluded, NotReal, SingularIntegrand, SingularNeighborhood, SingularPoint,
                     ToleranceNotMet)

DEFAULT_MARGIN = 0.1
FD_STEPS = (1e-3, 5e-4)


def _lhs_rhs(j: Jet2, spec: EquationSpec) -> tuple[complex, complex]:
    d = spec.delta.z
    e = spec.eps.z
    lhs = (d / e) * (j.vxx - e * e * j.vyy)
    rhs = 2 * spec.K * cmath.sinh(2 * d * j.v / e)
    return lhs, rhs


def _jet_at(sol: Solution, x: float, y: float) -> Jet2:
    if sol.singular_set(x, y):
        raise SingularPoint(f"({x}, {y}) lies on the singular set of {sol.family}")
    try:
        j = sol.eval(x, y)
    except (ZeroDivisionError, OverflowError, SingularIntegrand, ToleranceNotMet) as exc:
        # quadrature-defined closed forms fail this way when a path crosses a pole
        raise SingularPoint(f"{sol.family} cannot be evaluated at ({x}, {y}): {exc}") from exc
    if not j.is_finite():
        raise SingularPoint(f"{sol.family} is not finite at ({x}, {y})")
    return j


def pde_residual(sol: Solution, spec: EquationSpec, x: float, y: float) -> complex:
    """LHS - RHS of the equation selected by ``spec`` at (x, y)."""
    lhs, rhs = _lhs_rhs(_jet_at(sol, x, y), spec)
    return lhs - rhs


def relative_pde_residual(sol: Solution, spec: EquationSpec, x: float, y: float) -> tuple[float, float]:
    """(|LHS - RHS| / scale, scale) with scale = max(|LHS|, |RHS|, 1)."""
    lhs, rhs = _lhs_rhs(_jet_at(sol, x, y), spec)
    scale = max(abs(lhs), abs(rhs), 1.0)
    return abs(lhs - rhs) / scale, scale


@dataclass
class ResidualReport:
    grid: tuple
    max_abs: float
    mean_abs: float
    worst_point: tuple | None
    excluded_count: int
    relative_to: float

    def to_json(self) -> dict:
        out = asdict(self)
        out["grid"] = list(self.grid)
        out["worst_point"] = list(self.worst_point) if self.worst_point is not None else None
        return out


@dataclass
class ResidualField:
    """Per-node results of a scan; arrays are indexed [iy, ix].

    ``residual`` is NaN at excluded nodes.
    """

    xs: np.ndarray
    ys: np.ndarray
    values: np.ndarray
    residual: np.ndarray
    scale: np.ndarray
    excluded: np.ndarray


def _parse_region(region) -> tuple[float, float, float, float]:
    x0, x1, y0, y1 = (float(v) for v in region)
    if not (x1 > x0 and y1 > y0):
        raise ValueError(f"degenerate region {region!r}")
    return x0, x1, y0, y1


def residual_field(sol: Solution, spec: EquationSpec, region, nx: int, ny: int,
                   margin: float = DEFAULT_MARGIN, threads: int | None = None) -> ResidualField:
    """Evaluate w and its relative residual on an nx-by-ny grid.

    Nodes within ``margin`` of the singular set (or where the evaluator reports
    a singular point) are excluded.  Rows are computed in parallel but stored by
    index, so the result does not depend on the thread count.
    """
    if nx < 2 or ny < 2:
        raise ValueError("grid needs nx, ny >= 2")
    x0, x1, y0, y1 = _parse_region(region)
    xs = np.linspace(x0, x1, nx)
    ys = np.linspace(y0, y1, ny)

    def row(iy):
        y = float(ys[iy])
        vals = np.full(nx, complex("nan"), dtype=complex)
        res = np.full(nx, np.nan)
        sc = np.full(nx, np.nan)
        exc = np.zeros(nx, dtype=bool)
        for ix in range(nx):
            x = float(xs[ix])
            if sol.singular_set(x, y, margin):
                exc[ix] = True
                continue
            try:
                j = _jet_at(sol, x, y)
            except SingularPoint:
                exc[ix] = True
                continue
            lhs, rhs = _lhs_rhs(j, spec)
            s = max(abs(lhs), abs(rhs), 1.0)
            vals[ix] = j.v
            res[ix] = abs(lhs - rhs) / s
            sc[ix] = s
        return vals, res, sc, exc

    n = threads if threads is not None else thread_count()
    if n > 1:
        with ThreadPoolExecutor(max_workers=n) as pool:
            rows = list(pool.map(row, range(ny)))
    else:
        rows = [row(iy) for iy in range(ny)]
    return ResidualField(xs, ys, np.array([r[0] for r in rows]), np.array([r[1] for r in rows]),
                         np.array([r[2] for r in rows]), np.array([r[3] for r in rows]))


def report_from_field(fld: ResidualField) -> ResidualReport:
    """Reduce a scan in grid-index order (y-major)."""
    grid = (float(fld.xs[0]), float(fld.xs[-1]), float(fld.ys[0]), float(fld.ys[-1]),
            len(fld.xs), len(fld.ys))
    mask = ~fld.excluded
    if not mask.any():
        raise AllPointsExcluded(f"all {fld.excluded.size} nodes lie within the singular margin")
    flat = fld.residual.ravel()
    idx = np.flatnonzero(mask.ravel())
    vals = flat[idx]
    k = int(idx[int(np.argmax(vals))])
    iy, ix = divmod(k, len(fld.xs))
    total = 0.0
    for v in vals:  # fixed summation order
        total += float(v)
    return ResidualReport(grid, float(flat[k]), total / len(vals),
                          (float(fld.xs[ix]), float(fld.ys[iy])),
                          int(fld.excluded.sum()), float(fld.scale[iy, ix]))


def grid_scan(sol: Solution, spec: EquationSpec, region, nx: int, ny: int,
              margin: float = DEFAULT_MARGIN, threads: int | None = None) -> ResidualReport:
    """Maximum and mean relative residual over a grid, excluding singular nodes.

    ``max_abs`` is the largest |LHS - RHS| / max(|LHS|, |RHS|, 1) over the
    included nodes; ``relative_to`` is that normalization at the worst node.
    """
    return report_from_field(residual_field(sol, spec, region, nx, ny, margin, threads))


def realize(sol: Solution, x: float, y: float, tol: float = 1e-10) -> float:
    """Re(w) at (x, y), provided |Im(w)| <= tol."""
    w = _jet_at(sol, x, y).v
    if abs(w.imag) > tol:
        raise NotReal(f"{sol.family} has |Im w| = {abs(w.imag):.3g} at ({x}, {y})", abs(w.imag))
    return float(w.real)


def _fd_slots(jet, x: float, y: float, h: float) -> np.ndarray:
    """Central differences: first-order slots from values, second-order slots
    from the first-order slots (better conditioned than second differences)."""
    xp, xm = jet(x + h, y), jet(x - h, y)
    yp, ym = jet(x, y + h), jet(x, y - h)
    two_h = 2 * h
    return np.array([
        (xp.v - xm.v) / two_h,
        (yp.v - ym.v) / two_h,
        (xp.vx - xm.vx) / two_h,
        (yp.vx - ym.vx) / two_h,
        (xp.vy - xm.vy) / two_h,
        (yp.vy - ym.vy) / two_h,
    ])


def fd_crosscheck(sol: Solution, x: float, y: float, steps=FD_STEPS) -> float:
    """Max relative deviation between the jet's derivative slots and
    Richardson-extrapolated central differences.

    First derivatives are differenced from values and second derivatives from
    the neighbouring first-derivative slots, so every slot is checked against
    the level below it.  Each deviation is |fd - jet| / max(|jet|, 1).
    Raises SingularNeighborhood if the stencil comes within 10 h of the
    singular set or touches an unevaluable point.
    """
    h1, h2 = steps
    reach = max(h1, h2)
    if sol.singular_set(x, y, 10 * reach):
        raise SingularNeighborhood(f"({x}, {y}) is within {10 * reach} of the singular set")

    def jet(px, py):
        try:
            j = sol.eval(px, py)
        except (SingularPoint, ZeroDivisionError, OverflowError, SingularIntegrand,
                ToleranceNotMet) as exc:
            raise SingularNeighborhood(f"stencil point ({px}, {py}) is singular: {exc}") from exc
        if not j.is_finite():
            raise SingularNeighborhood(f"stencil point ({px}, {py}) is not finite")
        return j

    j = jet(x, y)
    d1 = _fd_slots(jet, x, y, h1)
    d2 = _fd_slots(jet, x, y, h2)
    ratio = (h1 / h2) ** 2
    fd = (ratio * d2 - d1) / (ratio - 1)
    # the mixed slot is checked from both sides
    ref = np.array([j.vx, j.vy, j.vxx, j.vxy, j.vxy, j.vyy])
    dev = np.abs(fd - ref) / np.maximum(np.abs(ref), 1.0)
    out = float(np.max(dev))
    if not math.isfinite(out):
        raise SingularNeighborhood(f"non-finite derivative estimate at ({x}, {y})")
    return out
