"""Command-line front end.

    solitonforge list-families
    solitonforge construct    --input spec.json --output handle.json
    solitonforge verify       --input handle.json [--region x0,x1,y0,y1] [--grid nx,ny] [--margin m]
    solitonforge sample       --input handle.json --output w.csv [--format csv|json]
    solitonforge bt-apply     --input bt.json --output f.csv
    solitonforge cascade-check --input series.json

Every input document carries ``"schema": 1`` and is validated before any work
is done; unknown fields are rejected.  Exit codes: 0 ok, 2 construction or
constraint error, 3 empty result, 4 verification failure.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys

import jsonschema
import numpy as np

from . import backlund, hirota, separation, verify
from .core import EquationSpec, UnitParam, describe, zero_solution
from .errors import (AllPointsExcluded, ConstraintViolated, DispersionViolated, SchemaError,
                     SolitonForgeError)

SCHEMA_VERSION = 1
VERIFY_TOL = 1e-8
EXIT_OK, EXIT_CONSTRUCT, EXIT_EMPTY, EXIT_VERIFY = 0, 2, 3, 4

_UNIT = {"enum": ["1", "i"]}
_NUM = {"type": "number"}
_WAVE = {
    "type": "object",
    "properties": {"alpha": _NUM, "beta": _NUM, "gamma": _NUM},
    "required": ["alpha", "beta"],
    "additionalProperties": False,
}
_COMPLEX = {"oneOf": [_NUM, {"type": "array", "items": _NUM, "minItems": 2, "maxItems": 2}]}
_DOMAIN = {"type": "array", "items": _NUM, "minItems": 4, "maxItems": 4}
_SIGN = {"enum": [-1, 1]}


def _params(props: dict, required=()) -> dict:
    return {"type": "object", "properties": props, "required": list(required),
            "additionalProperties": False}


def _waves(lo: int, hi: int) -> dict:
    return {"type": "array", "items": _WAVE, "minItems": lo, "maxItems": hi}


FAMILY_SCHEMAS = {
    "zero": _params({}),
    "one_soliton": _params({"delta": _UNIT, "kappa": _UNIT, "waves": _waves(1, 1)},
                           ["delta", "kappa", "waves"]),
    "two_soliton": _params({"delta": _UNIT, "kappa": _UNIT, "waves": _waves(2, 2)},
                           ["delta", "kappa", "waves"]),
    "three_soliton": _params({"delta": _UNIT, "kappa": _UNIT, "waves": _waves(3, 3),
                              "b_rule": {"enum": ["product", "sum"]}},
                             ["delta", "kappa", "waves"]),
    "n_soliton": _params({"delta": _UNIT, "kappa": _UNIT, "waves": _waves(1, 6)},
                         ["delta", "kappa", "waves"]),
    "special_two_soliton": _params({"delta": _UNIT, "kappa": _UNIT, "c": _NUM, "wave": _WAVE,
                                    "rule": {"enum": ["exact", "printed"]}},
                                   ["delta", "kappa", "c", "wave"]),
    "tanh_family": _params({"A": _NUM, "B": _NUM, "C": _NUM, "a": _NUM, "b": _NUM,
                            "delta": _UNIT, "eps": _UNIT, "F0": _NUM, "G0": _NUM,
                            "F_sign": _SIGN, "G_sign": _SIGN, "domain": _DOMAIN},
                           ["A", "B", "C", "delta", "eps", "F0"]),
    "tan_family": _params({"c1": _NUM, "c2": _NUM, "c3": _NUM, "a": _NUM, "b": _NUM,
                           "delta": _UNIT, "eps": _UNIT,
                           "b_coefficient": {"enum": ["derived", "statement"]},
                           "alpha0": _NUM, "alpha_sign": _SIGN, "beta0": _NUM, "beta_sign": _SIGN,
                           "A0": _NUM, "B0": _NUM, "alpha_p0": _NUM, "beta_p0": _NUM,
                           "domain": _DOMAIN},
                          ["c1", "c2", "c3", "delta", "eps", "alpha0", "beta0"]),
    "example5": _params({"eps": _UNIT, "delta": _UNIT, "from_odes": {"type": "boolean"}},
                        ["eps", "delta"]),
    "example7": _params({"eps": _UNIT, "delta": _UNIT}, ["eps", "delta"]),
    "example10_seed": _params({"printed": {"type": "boolean"}, "from_odes": {"type": "boolean"}}),
    "prop6": _params({"delta": _UNIT, "f00": _NUM,
                      "form": {"enum": ["corrected", "statement", "proof"]}}, ["delta", "f00"]),
    "prop8": _params({"form": {"enum": ["corrected", "statement", "proof"]}}),
}

FAMILY_NOTES = {
    "zero": "w = 0",
    "one_soliton": "Hirota one-soliton (normalized equation)",
    "two_soliton": "Hirota two-soliton",
    "three_soliton": "Hirota three-soliton",
    "n_soliton": "subset ansatz for 1 to 6 waves, accepted only if the bilinear system vanishes",
    "special_two_soliton": "two-soliton with a repeated wave and polynomial prefactor",
    "tanh_family": "tanh(kappa w/2) = kappa F(x) G(y), F and G from their quartic ODEs",
    "tan_family": "sinh(kappa w) = tan(kappa(A(x) + B(y))), A' and B' from their quartic ODEs",
    "example5": "tanh-family closed form with F = sinh(kx)/k, G = sec(delta y)",
    "example7": "tan-family closed form with A = 2x (as displayed)",
    "example10_seed": "hyperbolic sine-Gordon seed built from log cos and log cosh",
    "prop6": "auto-BT image of the tanh-family seed tanh(delta g/2) = delta F(x) G(y)",
    "prop8": "auto-BT image of the hyperbolic sine-Gordon seed, f(0,0) = 0",
}

HANDLE_SCHEMA = {
    "type": "object",
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "family": {"enum": sorted(FAMILY_SCHEMAS)},
        "params": {"type": "object"},
        "derived": {"type": "object"},
    },
    "required": ["schema", "family"],
    "additionalProperties": False,
}

BT_SCHEMA = {
    "type": "object",
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "seed": {"enum": ["zero", "example9", "example10"]},
        "delta": _UNIT,
        "f00": _COMPLEX,
        "order": {"enum": ["xy", "yx"]},
    },
    "required": ["schema", "seed"],
    "additionalProperties": False,
}

_TERM = {
    "type": "object",
    "properties": {k: _NUM for k in ("c_re", "c_im", "a_re", "a_im", "b_re", "b_im")}
    | {"px": {"type": "integer", "minimum": 0}, "py": {"type": "integer", "minimum": 0}},
    "required": ["c_re"],
    "additionalProperties": False,
}
CASCADE_SCHEMA = {
    "type": "object",
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "delta": _UNIT,
        "kappa": _UNIT,
        "F": {"type": "array", "items": {"type": "array", "items": _TERM}},
        "G": {"type": "array", "items": {"type": "array", "items": _TERM}},
        "max_order": {"type": "integer", "minimum": 1},
    },
    "required": ["schema", "delta", "kappa"],
    "additionalProperties": False,
}


# ---------------------------------------------------------------------------
# validation and construction
# ---------------------------------------------------------------------------


def _validate(doc, schema, what: str):
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise SchemaError(f"{what}: {exc.message} at {path}") from None


def validate_handle(doc: dict) -> dict:
    _validate(doc, HANDLE_SCHEMA, "solution spec")
    _validate(doc.get("params", {}), FAMILY_SCHEMAS[doc["family"]], f"{doc['family']} params")
    return doc


def _waves_of(params) -> list:
    return [hirota.WaveParams(w["alpha"], w["beta"], w.get("gamma", 0.0)) for w in params["waves"]]


def _as_complex(v) -> complex:
    return complex(v[0], v[1]) if isinstance(v, list) else complex(v)


def _pair(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def build(doc: dict):
    """(Solution, derived constants) for a validated handle."""
    fam = doc["family"]
    p = doc.get("params", {})
    derived: dict = {}
    if fam == "zero":
        return zero_solution(), derived
    if fam in ("one_soliton", "two_soliton", "three_soliton", "n_soliton"):
        waves = _waves_of(p)
        d, k = p["delta"], p["kappa"]
        if fam == "one_soliton":
            sol = hirota.one_soliton(waves[0], d, k)
        elif fam == "two_soliton":
            sol = hirota.two_soliton(waves[0], waves[1], d, k)
        elif fam == "three_soliton":
            sol = hirota.three_soliton(*waves, d, k, b_rule=p.get("b_rule", "product"))
        else:
            sol = hirota.n_soliton_candidate(waves, d, k)
        spec = hirota.SolitonSpec(d, k, waves, b_rule=p.get("b_rule", "product"))
        derived["A"] = [[_pair(a) for a in row] for row in spec.A]
        if len(waves) == 3:
            derived["B"] = _pair(spec.B)
        derived["dispersion_residuals"] = [abs(r) for r in spec.dispersion_residuals()]
    elif fam == "special_two_soliton":
        w = p["wave"]
        wave = hirota.WaveParams(w["alpha"], w["beta"], w.get("gamma", 0.0))
        sol = hirota.special_two_soliton(p["c"], wave, p["delta"], p["kappa"], p.get("rule", "exact"))
        derived["A"] = _pair(sol.params["A"])
        derived["dispersion_residuals"] = [abs(hirota.dispersion_residual(wave, p["delta"]))]
    elif fam == "tanh_family":
        tp = separation.TanhFamilyParams(p["A"], p["B"], p["C"], p.get("a", 1.0), p.get("b", 0.0),
                                         p["delta"], p["eps"])
        dom = tuple(p.get("domain", (-5.0, 5.0, -5.0, 5.0)))
        sol = separation.tanh_family_from_odes(tp, p["F0"], p.get("G0", 1.0), p.get("F_sign", 1),
                                               p.get("G_sign", 1), dom)
        derived["K"] = tp.K
        derived["fg_consistency_residual"] = abs(separation.fg_consistency_residual(
            sol.params["F"], sol.params["G"], tp, 0.5 * (dom[0] + dom[1]) + 0.1,
            0.5 * (dom[2] + dom[3])))
    elif fam == "tan_family":
        tp = separation.TanFamilyParams(p["c1"], p["c2"], p["c3"], p.get("a", 1.0), p.get("b", 0.0),
                                        p["delta"], p["eps"], p.get("b_coefficient", "derived"))
        dom = tuple(p.get("domain", (-5.0, 5.0, -5.0, 5.0)))
        derived["K"] = tp.K
        derived["ab_constraint_residual"] = separation.ab_constraint_residual(tp)
        sol = separation.tan_family_from_odes(
            tp, p["alpha0"], p.get("alpha_sign", 1), p["beta0"], p.get("beta_sign", 1),
            p.get("A0", 0.0), p.get("B0", 0.0), dom, p.get("alpha_p0"), p.get("beta_p0"))
        derived["first_integral_residual"] = abs(separation.tan_first_integral_residual(
            tp, sol.params["A"], sol.params["B"]))
    elif fam == "example5":
        sol = separation.example5_solution(p["eps"], p["delta"], p.get("from_odes", False))
        derived["K"] = sol.spec.K
    elif fam == "example7":
        sol = separation.example7_solution(p["eps"], p["delta"])
        derived["ab_constraint_residual"] = separation.ab_constraint_residual(
            separation.example7_params(p["eps"], p["delta"]))
    elif fam == "example10_seed":
        if p.get("from_odes", False):
            sol = separation.example10_from_odes()
        else:
            sol = separation.example10_solution(p.get("printed", False))
        derived["ab_constraint_residual"] = separation.ab_constraint_residual(
            separation.example10_params())
    elif fam == "prop6":
        delta = UnitParam.parse(p["delta"])
        _, F, G = backlund.example9_seed(delta)
        pp = backlund.Prop6Params.from_f00(F, G, p["f00"], delta)
        sol = backlund.prop6_solution(pp, delta, p.get("form", "corrected"))
        derived["c0"] = _pair(pp.c0)
    elif fam == "prop8":
        g = backlund.example10_seed()
        pp = backlund.Prop8Params(g.params["A"], g.params["B"])
        sol = backlund.prop8_solution(pp, UnitParam.IMAG, p.get("form", "corrected"))
        derived["A0"] = _pair(pp.A0)
    else:  # pragma: no cover - guarded by the schema
        raise SchemaError(f"unknown family {fam!r}")
    spec = sol.spec
    if spec is not None:
        derived["equation"] = {"delta": spec.delta.value, "eps": spec.eps.value,
                               "a": spec.a, "b": spec.b, "K": spec.K}
    return sol, derived


def construct(doc: dict) -> dict:
    """Validated descriptor with derived constants (the ``construct`` command)."""
    validate_handle(doc)
    _, derived = build(doc)
    return {"schema": SCHEMA_VERSION, "family": doc["family"], "params": doc.get("params", {}),
            "derived": describe(derived)}


def _spec_of(sol) -> EquationSpec:
    if sol.spec is None:
        return EquationSpec("1", "1", 1.0, 0.0)
    return sol.spec


# ---------------------------------------------------------------------------
# command bodies (library-level, used by the tests as the reference path)
# ---------------------------------------------------------------------------

DEFAULT_REGION = (-3.0, 3.0, -3.0, 3.0)
DEFAULT_GRID = (21, 21)


def _bt_discrepancy(doc: dict, region, nx: int, ny: int) -> dict:
    """Closed-form auto-BT image compared against the integrator on (region, nx, ny)."""
    p = doc.get("params", {})
    form = p.get("form", "corrected")
    if doc["family"] == "prop6":
        delta = UnitParam.parse(p["delta"])
        g, F, G = backlund.example9_seed(delta)
        cfg = backlund.AutoBTConfig(delta, g, p["f00"])
        pp = backlund.Prop6Params.from_f00(F, G, p["f00"], delta)
        sol = backlund.prop6_solution(pp, delta, form)
        excl = lambda x, y: abs(x) < 0.1  # noqa: E731
    else:
        g = backlund.example10_seed()
        cfg = backlund.AutoBTConfig(UnitParam.IMAG, g, 0.0)
        sol = backlund.prop8_solution(backlund.Prop8Params(g.params["A"], g.params["B"]),
                                      UnitParam.IMAG, form)
        excl = lambda x, y: abs(y) < 0.1  # noqa: E731
    grid = backlund.bt_integrate(cfg, region, nx, ny)
    return backlund.compare_with_integrator(sol, grid, g, excl, label=f"{doc['family']} {form}")


def verify_handle(doc: dict, region=None, grid=None, margin: float = verify.DEFAULT_MARGIN):
    """(exit code, output document) of the ``verify`` command."""
    validate_handle(doc)
    sol, _ = build(doc)
    is_bt = doc["family"] in ("prop6", "prop8")
    if region is None:
        region = (-1.0, 1.0, -1.0, 1.0) if is_bt else DEFAULT_REGION
    nx, ny = grid or DEFAULT_GRID
    try:
        report = verify.grid_scan(sol, _spec_of(sol), region, nx, ny, margin)
        rep_json = report.to_json()
        ok = report.max_abs <= VERIFY_TOL
    except AllPointsExcluded as exc:
        if not is_bt:
            raise
        rep_json, ok = {"error": str(exc)}, False
    out = {"schema": SCHEMA_VERSION, "family": doc["family"], "tolerance": VERIFY_TOL,
           "report": rep_json}
    if is_bt:
        disc = _bt_discrepancy(doc, region, nx, ny)
        out["discrepancy"] = disc
        out["status"] = "ok" if ok and disc["verdict"] == "agree" else "warning"
        return EXIT_OK, out
    out["status"] = "ok" if ok else "fail"
    return (EXIT_OK if ok else EXIT_VERIFY), out


def _g17(v: float) -> str:
    return format(float(v), ".17g")


def sample_handle(doc: dict, region=None, grid=None, margin: float = verify.DEFAULT_MARGIN,
                  fmt: str = "csv"):
    """Text of the ``sample`` command (CSV or JSON)."""
    validate_handle(doc)
    sol, _ = build(doc)
    nx, ny = grid or DEFAULT_GRID
    fld = verify.residual_field(sol, _spec_of(sol), region or DEFAULT_REGION, nx, ny, margin)
    if fld.excluded.all():
        raise AllPointsExcluded(f"all {fld.excluded.size} nodes lie within the singular margin")
    if fmt == "json":
        return json.dumps({
            "schema": SCHEMA_VERSION, "family": doc["family"],
            "x": fld.xs.tolist(), "y": fld.ys.tolist(),
            "re_w": _nan_to_none(fld.values.real), "im_w": _nan_to_none(fld.values.imag),
            "residual": _nan_to_none(fld.residual), "excluded": fld.excluded.tolist(),
        }, indent=1) + "\n"
    buf = io.StringIO()
    buf.write("x,y,re_w,im_w,residual,excluded\n")
    for iy, y in enumerate(fld.ys):
        for ix, x in enumerate(fld.xs):
            w = fld.values[iy, ix]
            buf.write(",".join((_g17(x), _g17(y), _g17(w.real), _g17(w.imag),
                                _g17(fld.residual[iy, ix]), str(int(fld.excluded[iy, ix])))) + "\n")
    return buf.getvalue()


def _nan_to_none(a: np.ndarray) -> list:
    return [[None if math.isnan(v) else float(v) for v in row] for row in np.asarray(a)]


def bt_apply(doc: dict, region=None, grid=None, fmt: str = "csv"):
    """(text, summary) of the ``bt-apply`` command."""
    _validate(doc, BT_SCHEMA, "bt-apply spec")
    seed = doc["seed"]
    if seed == "example10":
        if doc.get("delta", "i") != "i":
            raise SchemaError("the example10 seed solves the delta = i equation")
        delta, g = UnitParam.IMAG, backlund.example10_seed()
    else:
        delta = UnitParam.parse(doc.get("delta", "1"))
        g = zero_solution() if seed == "zero" else backlund.example9_seed(delta)[0]
    cfg = backlund.AutoBTConfig(delta, g, _as_complex(doc.get("f00", 0.0)))
    nx, ny = grid or DEFAULT_GRID
    region = region or (-1.0, 1.0, -1.0, 1.0)
    bg = backlund.bt_integrate(cfg, region, nx, ny, order=doc.get("order", "xy"))
    bt = backlund.bt_residual_grid(bg, g)
    pde = backlund.fd_pde_residual_grid(bg)
    summary = {"schema": SCHEMA_VERSION, "seed": seed, "delta": delta.value,
               "max_bt_residual": float(np.nanmax(bt)),
               "max_fd_pde_residual": float(np.nanmax(pde)) if np.isfinite(pde).any() else None}
    if fmt == "json":
        return json.dumps(summary | {"grid": bg.to_json()}, indent=1) + "\n", summary
    buf = io.StringIO()
    buf.write("x,y,re_f,im_f,bt_residual\n")
    for iy, y in enumerate(bg.ys):
        for ix, x in enumerate(bg.xs):
            f = bg.f[iy, ix]
            buf.write(",".join((_g17(x), _g17(y), _g17(f.real), _g17(f.imag), _g17(bt[iy, ix]))) + "\n")
    return buf.getvalue(), summary


def cascade_check(doc: dict) -> dict:
    """Per-order residual summary of the ``cascade-check`` command."""
    _validate(doc, CASCADE_SCHEMA, "cascade series")
    series = hirota.CascadeSeries.from_json({"F": doc.get("F", []), "G": doc.get("G", [])})
    if not series.F_terms and not series.G_terms:
        return {"schema": SCHEMA_VERSION, "orders": [], "all_zero": True, "vacuous": True}
    res = hirota.cascade_residuals(series, doc["delta"], doc["kappa"], doc.get("max_order"))
    orders = []
    for r in res:
        orders.append({"order": r.order, "equation": r.kind, "is_zero": r.is_zero(),
                       "terms": r.residual.to_json()})
    return {"schema": SCHEMA_VERSION, "orders": orders,
            "all_zero": all(o["is_zero"] for o in orders), "vacuous": False}


def list_families() -> dict:
    return {"schema": SCHEMA_VERSION,
            "families": [{"family": k, "description": FAMILY_NOTES[k],
                          "params": sorted(FAMILY_SCHEMAS[k]["properties"]),
                          "required": FAMILY_SCHEMAS[k]["required"]}
                         for k in sorted(FAMILY_SCHEMAS)]}


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------


def _floats(text: str, n: int, what: str) -> tuple:
    parts = text.split(",")
    if len(parts) != n:
        raise argparse.ArgumentTypeError(f"{what} needs {n} comma-separated values")
    try:
        return tuple(float(v) for v in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{what}: not a number in {text!r}") from None


def _region(text: str):
    return _floats(text, 4, "--region")


def _grid(text: str):
    vals = _floats(text, 2, "--grid")
    if any(v != int(v) or v < 2 for v in vals):
        raise argparse.ArgumentTypeError("--grid needs two integers >= 2")
    return tuple(int(v) for v in vals)


def _load(src: str | None):
    if src is None:
        raise SchemaError("--input is required")
    text = src
    if not src.lstrip().startswith("{"):
        with open(src, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"input is not valid JSON: {exc}") from None


def _emit(text: str, dest: str | None):
    if dest is None:
        sys.stdout.write(text)
    else:
        with open(dest, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _dump(doc) -> str:
    return json.dumps(doc, indent=1) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="solitonforge",
                                 description="Exact solutions of sinh/sine-Gordon type equations.")
    ap.add_argument("command", choices=["list-families", "construct", "verify", "sample",
                                        "bt-apply", "cascade-check"])
    ap.add_argument("--input", help="JSON document: a path or inline text starting with '{'")
    ap.add_argument("--output", help="output path (stdout if omitted)")
    ap.add_argument("--region", type=_region, help="x0,x1,y0,y1")
    ap.add_argument("--grid", type=_grid, help="nx,ny")
    ap.add_argument("--margin", type=float, default=verify.DEFAULT_MARGIN,
                    help="singular-set exclusion distance (default 0.1)")
    ap.add_argument("--format", choices=["csv", "json"], default=None,
                    help="sample/bt-apply output format (default csv)")
    return ap


def _join_values(argv: list) -> list:
    """Attach region/grid values to their flag so "--region -1,1,-1,1" parses."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--region", "--grid") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_join_values(argv))
    fmt = args.format or "csv"
    try:
        if args.command == "list-families":
            _emit(_dump(list_families()), args.output)
            return EXIT_OK
        doc = _load(args.input)
        if args.command == "construct":
            _emit(_dump(construct(doc)), args.output)
            return EXIT_OK
        if args.command == "verify":
            code, out = verify_handle(doc, args.region, args.grid, args.margin)
            _emit(_dump(out), args.output)
            if out["status"] == "warning":
                print("warning: closed form disagrees with the integrator or has a large residual; "
                      "see the discrepancy report", file=sys.stderr)
            return code
        if args.command == "sample":
            _emit(sample_handle(doc, args.region, args.grid, args.margin, fmt), args.output)
            return EXIT_OK
        if args.command == "bt-apply":
            text, _ = bt_apply(doc, args.region, args.grid, fmt)
            _emit(text, args.output)
            return EXIT_OK
        if args.command == "cascade-check":
            _emit(_dump(cascade_check(doc)), args.output)
            return EXIT_OK
    except (SchemaError, ConstraintViolated, DispersionViolated) as exc:
        residual = getattr(exc, "residual", None)
        extra = (f" (residual {residual:.6g})" if isinstance(residual, (int, float))
                 and "residual" not in str(exc) else "")
        print(f"error: {exc}{extra}", file=sys.stderr)
        return EXIT_CONSTRUCT
    except AllPointsExcluded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except (SolitonForgeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCT
    return EXIT_OK  # pragma: no cover


__all__ = ["main", "construct", "build", "verify_handle", "sample_handle", "bt_apply",
           "cascade_check", "list_families", "validate_handle"]
