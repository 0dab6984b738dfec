"""Command-line front end: machine-readable verification reports and profiles.

Subcommands: schwarzian | norm | verify | profile | dieudonne | distortion.
Reports are JSON (``--json``; floats with 17 significant digits, deterministic
for a fixed seed and configuration), disk profiles are CSV with header
``r,theta,weighted_modulus``.  The default series order is 128, overridable
per call with ``--order`` or globally via the SCHWARZIAN_LAB_ORDER
environment variable.

Function specs:  extremal-g:BETA | extremal-f:ALPHA,Z0 | series:FILE.json |
subord:CLASS,OMEGA.  Class specs: g:BETA | f:ALPHA.  Schwarz-function specs:
blaschke:Z1;Z2;...[@THETA] | series:FILE.json.  Series files hold a JSON list
of [re, im] coefficient pairs.
"""

import argparse
import json
import os
import sys

import numpy as np

from .battery import (
    degree2_battery,
    random_pairs,
    schwarz_battery,
    series_members,
    subordination_members,
)
from .disk import GridConfig, dieudonne_check
from .distortion import delta_param, verify_tpd
from .errors import BadParameter, SchwarzlabError
from .families import (
    BlaschkeProduct,
    FAlpha,
    GBeta,
    SchwarzSeries,
    SubordinationFunction,
    extremal_f,
    extremal_g,
    membership_check,
)
from .functions import SeriesFunction, schwarzian
from .norm import estimate_norm, pointwise_bound_f, pointwise_bound_g, weighted_profile
from .series import DEFAULT_ORDER, TaylorSeries

ENV_ORDER = "SCHWARZIAN_LAB_ORDER"


# ----------------------------------------------------------------------
# deterministic serialization (floats as %.17g)
# ----------------------------------------------------------------------

def _fmt(x):
    return format(float(x), ".17g")


def _to_json(obj, indent=0):
    pad = "  " * indent
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        inner = ",\n".join(
            f"{pad}  {json.dumps(str(k))}: {_to_json(v, indent + 1)}" for k, v in obj.items()
        )
        return "{\n" + inner + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        inner = ",\n".join(f"{pad}  {_to_json(v, indent + 1)}" for v in obj)
        return "[\n" + inner + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj)!r}")


def _complex_pair(z):
    return [float(np.real(z)), float(np.imag(z))]


# ----------------------------------------------------------------------
# spec parsing
# ----------------------------------------------------------------------

def parse_complex(text):
    try:
        return complex(text.strip().replace(" ", "").replace("i", "j"))
    except ValueError as exc:
        raise BadParameter(f"cannot parse complex number {text!r}") from exc


def parse_class(text):
    kind, _, value = text.partition(":")
    if not value:
        raise BadParameter(f"class spec must look like g:BETA or f:ALPHA, got {text!r}")
    if kind.lower() == "g":
        return GBeta(float(value))
    if kind.lower() == "f":
        return FAlpha(float(value))
    raise BadParameter(f"unknown class kind {kind!r} (expected g or f)")


def load_series_file(path):
    with open(path) as fh:
        data = json.load(fh)
    try:
        coeffs = [complex(float(re), float(im)) for re, im in data]
    except (TypeError, ValueError) as exc:
        raise BadParameter(f"{path}: expected a JSON list of [re, im] pairs") from exc
    return TaylorSeries(coeffs)


def parse_omega(text):
    kind, _, rest = text.partition(":")
    kind = kind.lower()
    if kind == "blaschke":
        body, _, theta = rest.partition("@")
        zeros = [parse_complex(tok) for tok in body.split(";") if tok]
        rotation = float(theta) if theta else 0.0
        return BlaschkeProduct(zeros, rotation=rotation)
    if kind == "series":
        return SchwarzSeries(load_series_file(rest))
    raise BadParameter(f"unknown Schwarz-function spec {text!r}")


def parse_function(text, order):
    kind, _, rest = text.partition(":")
    kind = kind.lower()
    if kind == "extremal-g":
        return extremal_g(float(rest))
    if kind == "extremal-f":
        alpha, _, z0 = rest.partition(",")
        if not z0:
            raise BadParameter("extremal-f needs ALPHA,Z0")
        return extremal_f(float(alpha), float(z0), order=order)
    if kind == "series":
        return SeriesFunction(load_series_file(rest))
    if kind == "subord":
        # class spec contains a ':', so split off the first comma after it
        cls_text, _, omega_text = rest.partition(",")
        if not omega_text:
            raise BadParameter("subord needs CLASS,OMEGA")
        spec = parse_class(cls_text)
        return SubordinationFunction(spec, parse_omega(omega_text), order=order)
    raise BadParameter(f"unknown function spec {text!r}")


def _resolve_order(args):
    if getattr(args, "order", None) is not None:
        return args.order
    env = os.environ.get(ENV_ORDER)
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise BadParameter(f"{ENV_ORDER} must be an integer, got {env!r}") from exc
    return DEFAULT_ORDER


def _grid_from(args, radii=64, angles=96, r_max=0.995):
    return GridConfig.chebyshev(
        n_radii=args.grid_radii if args.grid_radii else radii,
        n_angles=args.grid_angles if args.grid_angles else angles,
        r_max=args.r_max if args.r_max else r_max,
    )


def _emit(args, report, text_lines):
    if args.json:
        print(_to_json(report))
    else:
        for line in text_lines:
            print(line)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(_to_json(report) + "\n")


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------

def cmd_schwarzian(args):
    order = _resolve_order(args)
    f = parse_function(args.fn, order)
    z = parse_complex(args.z)
    s = complex(schwarzian(f, z))
    report = {
        "command": "schwarzian",
        "function": f.label(),
        "z": _complex_pair(z),
        "schwarzian": _complex_pair(s),
        "abs": abs(s),
    }
    _emit(args, report, [
        f"S_f({z}) = {_fmt(s.real)} + {_fmt(s.imag)}j",
        f"|S_f({z})| = {_fmt(abs(s))}",
    ])
    return 0


def cmd_norm(args):
    order = _resolve_order(args)
    f = parse_function(args.fn, order)
    spec = parse_class(args.cls) if args.cls else None
    cfg = _grid_from(args)
    rep = estimate_norm(f, cfg, spec)
    checks = []
    if spec is not None:
        checks.append({
            "name": "norm_bound",
            "passed": rep.estimate <= rep.theoretical_bound + 1e-6,
            "slack": rep.slack,
        })
    report = {
        "command": "norm",
        "function": f.label(),
        "class": spec.label() if spec else None,
        "seed": None,
        "norm_estimate": rep.estimate,
        "theoretical_bound": rep.theoretical_bound,
        "slack": rep.slack,
        "peak": {"r": rep.peak_r, "theta": rep.peak_theta},
        "extrapolated": rep.extrapolated,
        "interior_max": rep.interior_max,
        "boundary_estimate": rep.boundary_estimate,
        "checks": checks,
    }
    lines = [
        f"norm estimate      {_fmt(rep.estimate)}",
        f"peak               r={_fmt(rep.peak_r)} theta={_fmt(rep.peak_theta)}",
        f"extrapolated       {rep.extrapolated}",
        f"interior max       {_fmt(rep.interior_max)}",
    ]
    if rep.boundary_estimate is not None:
        lines.append(f"boundary estimate  {_fmt(rep.boundary_estimate)}")
    if spec is not None:
        lines.append(f"theoretical bound  {_fmt(rep.theoretical_bound)}")
        lines.append(f"slack              {_fmt(rep.slack)}")
    _emit(args, report, lines)
    return 0 if all(c["passed"] for c in checks) else 1


def _check_line(check):
    tag = "PASS" if check["passed"] else "FAIL"
    detail = check.get("detail") or ""
    slack = check.get("worst_slack")
    slack_txt = f" worst_slack={_fmt(slack)}" if slack is not None else ""
    return f"[{tag}] {check['name']}{slack_txt}{(' ' + detail) if detail else ''}"


def cmd_verify(args):
    spec = parse_class(args.cls)
    n = args.n
    rng = np.random.default_rng(args.seed)
    bound = spec.norm_bound()
    omegas = schwarz_battery(rng, n)
    checks = []

    # membership of every generated member, 60x60 grid to r = 0.99
    members = series_members(spec, omegas, r_max=0.99)
    worst_margin = min(
        membership_check(f, spec).worst_margin for f in members
    )
    checks.append({
        "name": "membership",
        "passed": worst_margin > -1e-9,
        "worst_slack": worst_margin,
        "detail": None,
    })

    # pointwise Schwarzian bound on a 2000-point grid
    grid = GridConfig.chebyshev(50, 40, 0.99)
    zs = grid.mesh()
    if isinstance(spec, GBeta):
        bound_z = pointwise_bound_g(spec.beta, zs)
    else:
        bound_z = pointwise_bound_f(spec.alpha, zs)
    worst_rel = min(
        float(np.min((bound_z - np.abs(schwarzian(f, zs))) / bound_z)) for f in members
    )
    checks.append({
        "name": "pointwise_bound",
        "passed": worst_rel >= -1e-8,
        "worst_slack": worst_rel,
        "detail": "relative to the pointwise bound",
    })

    # norm estimates stay below the class bound
    subs = subordination_members(spec, omegas)
    estimates = [estimate_norm(f, spec=spec).estimate for f in subs]
    worst_norm_slack = bound + 1e-6 - max(estimates)
    checks.append({
        "name": "norm_bound",
        "passed": worst_norm_slack >= 0.0,
        "worst_slack": worst_norm_slack,
        "detail": f"max estimate {_fmt(max(estimates))} vs bound {_fmt(bound)}",
    })

    # derivative variability region for the generators
    z0s = [0.9 * np.sqrt(rng.random()) * np.exp(2j * np.pi * rng.random()) for _ in range(10)]
    worst_d = min(dieudonne_check(om, z0).slack for om in omegas for z0 in z0s)
    checks.append({
        "name": "dieudonne",
        "passed": worst_d >= -1e-10,
        "worst_slack": worst_d,
        "detail": None,
    })
    eq_abs = max(
        abs(dieudonne_check(om, z0).slack)
        for om in degree2_battery(rng, min(n, 20))
        for z0 in z0s
    )
    checks.append({
        "name": "dieudonne_equality",
        "passed": eq_abs <= 1e-9,
        "worst_slack": eq_abs,
        "detail": "max |slack| over degree-2 products fixing 0",
    })

    # two-point distortion, when the class admits a delta
    try:
        delta_param(spec)
    except BadParameter:
        checks.append({
            "name": "two_point_distortion",
            "passed": True,
            "worst_slack": None,
            "detail": "not applicable: class norm bound <= 2",
        })
    else:
        worst_lo, worst_up = None, np.inf
        for f in subs:
            rep = verify_tpd(f, spec, random_pairs(rng, 3))
            if rep.worst_lower_slack is not None:
                worst_lo = (
                    rep.worst_lower_slack
                    if worst_lo is None
                    else min(worst_lo, rep.worst_lower_slack)
                )
            worst_up = min(worst_up, rep.worst_upper_slack)
        worst = worst_up if worst_lo is None else min(worst_lo, worst_up)
        checks.append({
            "name": "two_point_distortion",
            "passed": worst >= -1e-9,
            "worst_slack": float(worst),
            "detail": None,
        })

    passed = all(c["passed"] for c in checks)
    report = {
        "command": "verify",
        "function": None,
        "class": spec.label(),
        "seed": args.seed,
        "n": n,
        "norm_estimate": max(estimates),
        "theoretical_bound": bound,
        "slack": bound - max(estimates),
        "peak": None,
        "extrapolated": None,
        "checks": checks,
        "passed": passed,
    }
    lines = [f"class {spec.label()}  n={n}  seed={args.seed}"]
    lines += [_check_line(c) for c in checks]
    lines.append("all checks passed" if passed else "SOME CHECKS FAILED")
    _emit(args, report, lines)
    return 0 if passed else 1


def cmd_profile(args):
    order = _resolve_order(args)
    f = parse_function(args.fn, order)
    cfg = _grid_from(args)
    thetas = cfg.thetas()
    rows = []
    for r in cfg.radii:
        vals = weighted_profile(f, r, thetas)
        for th, v in zip(thetas, vals):
            rows.append((r, th, float(v)))
    out = args.out or "profile.csv"
    with open(out, "w") as fh:
        fh.write("r,theta,weighted_modulus\n")
        for r, th, v in rows:
            fh.write(f"{_fmt(r)},{_fmt(th)},{_fmt(v)}\n")
    print(f"wrote {len(rows)} rows to {out}")
    return 0


def cmd_dieudonne(args):
    omega = parse_omega(args.omega)
    z0 = parse_complex(args.z0)
    rep = dieudonne_check(omega, z0)
    report = {
        "command": "dieudonne",
        "omega": omega.label(),
        "z0": _complex_pair(z0),
        "lhs": rep.lhs,
        "rhs": rep.rhs,
        "slack": rep.slack,
        "equality": abs(rep.slack) <= 1e-9,
    }
    _emit(args, report, [
        f"lhs   {_fmt(rep.lhs)}",
        f"rhs   {_fmt(rep.rhs)}",
        f"slack {_fmt(rep.slack)}",
    ])
    return 0 if rep.slack >= -1e-10 else 1


def cmd_distortion(args):
    order = _resolve_order(args)
    f = parse_function(args.fn, order)
    spec = parse_class(args.cls)
    rng = np.random.default_rng(args.seed)
    pairs = random_pairs(rng, args.pairs)
    rep = verify_tpd(f, spec, pairs)
    report = {
        "command": "distortion",
        "function": f.label(),
        "class": spec.label(),
        "seed": args.seed,
        "n_pairs": args.pairs,
        "delta": rep.delta,
        "worst_lower_slack": rep.worst_lower_slack,
        "worst_upper_slack": rep.worst_upper_slack,
        "lower_skipped": rep.lower_skipped,
        "passed": rep.ok,
    }
    lines = [
        f"delta              {_fmt(rep.delta)}",
        f"worst lower slack  "
        + ("n/a" if rep.worst_lower_slack is None else _fmt(rep.worst_lower_slack)),
        f"worst upper slack  {_fmt(rep.worst_upper_slack)}",
        f"lower skipped      {rep.lower_skipped} (lambda > pi/delta)",
        "ok" if rep.ok else "FAILED",
    ]
    _emit(args, report, lines)
    return 0 if rep.ok else 1


# ----------------------------------------------------------------------
# argument wiring
# ----------------------------------------------------------------------

def _add_common(p, fn=False, cls=False, cls_required=False, grid=False, seed=False):
    if fn:
        p.add_argument("--fn", required=True, help="function spec")
    if cls:
        p.add_argument("--class", dest="cls", required=cls_required, help="class spec g:BETA | f:ALPHA")
    if grid:
        p.add_argument("--grid-angles", type=int, default=None)
        p.add_argument("--grid-radii", type=int, default=None)
        p.add_argument("--r-max", type=float, default=None)
    if seed:
        p.add_argument("--seed", type=int, default=0)
    p.add_argument("--order", type=int, default=None, help="series truncation order")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--out", default=None, help="also write the report to this path")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="schwarzlab",
        description="Schwarzian derivatives, sup-norm estimates, and class verification on the unit disk",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schwarzian", help="evaluate S_f at a point")
    _add_common(p, fn=True)
    p.add_argument("--z", required=True, help="evaluation point (complex)")
    p.set_defaults(run=cmd_schwarzian)

    p = sub.add_parser("norm", help="estimate the hyperbolic sup-norm of S_f")
    _add_common(p, fn=True, cls=True, grid=True)
    p.set_defaults(run=cmd_norm)

    p = sub.add_parser("verify", help="run the certification battery for a class")
    _add_common(p, cls=True, cls_required=True, seed=True)
    p.add_argument("--n", type=int, default=20, help="battery size")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("profile", help="dump the weighted Schwarzian profile as CSV")
    _add_common(p, fn=True, grid=True)
    p.set_defaults(run=cmd_profile)

    p = sub.add_parser("dieudonne", help="derivative variability check for a Schwarz function")
    _add_common(p)
    p.add_argument("--omega", required=True, help="Schwarz-function spec")
    p.add_argument("--z0", required=True, help="base point (complex, nonzero)")
    p.set_defaults(run=cmd_dieudonne)

    p = sub.add_parser("distortion", help="two-point distortion bounds over random pairs")
    _add_common(p, fn=True, cls=True, cls_required=True, seed=True)
    p.add_argument("--pairs", type=int, default=100)
    p.set_defaults(run=cmd_distortion)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except SchwarzlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
