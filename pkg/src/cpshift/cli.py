"""Command-line front end: point evaluations, sweeps, figure data.

Everything numerical lives in the library modules; this layer parses
flags, schedules grid evaluations (optionally across processes) and
writes deterministic CSV or JSON.  Floats are always rendered with
repr-faithful %.17g so identical invocations produce byte-identical
files.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

import numpy as np

from . import __version__, halfplane, plane, shift, wire
from .errors import CpshiftError
from .quad import DEFAULT_SETTINGS
from .types import HalfPlaneConfig, PlaneConfig, WireConfig

# vacuum permittivity, F/m (CODATA 2018); used only for --units si
EPSILON_0 = 8.8541878128e-12

_PI_RE = re.compile(r"^\s*([0-9.eE+-]*?)\s*\*?\s*pi\s*(?:/\s*([0-9.eE+-]+))?"
                    r"\s*$")


def parse_angle(text: str) -> float:
    """Parse an angle that may use pi-literals: 'pi', 'pi/2', '0.75pi',
    '3*pi/4', or any plain float."""
    m = _PI_RE.match(text)
    if m:
        coef = float(m.group(1)) if m.group(1) not in ("", "+", "-") \
            else float(m.group(1) + "1")
        val = coef * math.pi
        if m.group(2):
            val /= float(m.group(2))
        return val
    return float(text)


def _fmt(x) -> str:
    if isinstance(x, float):
        return "%.17g" % x
    return str(x)


def _settings(tol: float | None):
    if tol is None:
        return DEFAULT_SETTINGS
    return replace(DEFAULT_SETTINGS, rel_tol=tol)


def _si_factor(args) -> float:
    if args.units == "reduced":
        return 1.0
    return args.mu_si ** 2 / (4.0 * math.pi * EPSILON_0 * args.length_si ** 3)


def _write_rows(path, header, rows, fmt, meta):
    """Write rows (list of dicts keyed by header) as csv or json."""
    if fmt == "csv":
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join(_fmt(row[k]) for k in header))
        data = "\n".join(lines) + "\n"
    else:
        data = json.dumps({"meta": meta, "rows": rows},
                          indent=2, sort_keys=True) + "\n"
    if path is None or path == "-":
        sys.stdout.write(data)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(data)


def _grid(lo, hi, count, spacing):
    if not (hi > lo) or count < 2:
        raise ValueError("need max > min and count >= 2")
    if spacing == "log":
        if lo <= 0:
            raise ValueError("log spacing needs min > 0")
        return np.geomspace(lo, hi, count)
    return np.linspace(lo, hi, count)


def _regime_tag(d, R, E):
    if E > 0.0:
        reg = wire.classify_regime(d, R, 1.0 / E)
        return reg.tag if reg.clear else reg.tag + "?"
    return "-"


# -- eval --------------------------------------------------------------


def _triple_for(args, settings):
    if args.geometry == "plane":
        cfg = PlaneConfig(d=args.d, E=args.E)
        return plane.xi_plane(cfg, settings), cfg, "-"
    if args.geometry == "wire":
        cfg = WireConfig(R=args.R, rho=args.rho, E=args.E)
        return (wire.xi_wire(cfg, settings), cfg,
                _regime_tag(cfg.d, cfg.R, cfg.E))
    cfg = HalfPlaneConfig(rho=args.rho, phi=parse_angle(args.phi), E=args.E)
    return halfplane.xi_halfplane(cfg, settings), cfg, "-"


def cmd_eval(args) -> int:
    settings = _settings(args.tol)
    xi, cfg, tag = _triple_for(args, settings)
    dw = shift.isotropic_shift(cfg, args.E, 1.0, settings)
    si = _si_factor(args)
    unit = "reduced" if args.units == "reduced" else "J"
    print(f"geometry:      {args.geometry}")
    print(f"config:        {cfg}")
    print(f"xi_rho:        {_fmt(xi.rho_comp)}")
    print(f"xi_phi:        {_fmt(xi.phi_comp)}")
    print(f"xi_z:          {_fmt(xi.z_comp)}")
    print(f"error_est:     {_fmt(xi.error_estimate)}")
    print(f"regime:        {tag}")
    print(f"shift_iso:     {_fmt(dw.value * si)} [{unit}]")
    return 0


# -- sweep -------------------------------------------------------------

_SWEEP_VARS = {
    "plane": ("d", "E"),
    "wire": ("d", "rho", "R", "E"),
    "halfplane": ("rho", "phi", "E"),
}


def _sweep_point(task):
    """Evaluate one sweep row; returns a dict.  Module-level so process
    pools can pickle it."""
    geometry, fixed, var, value, settings = task
    params = dict(fixed)
    params[var] = value
    row = {k: params[k] for k in sorted(params)}
    row["error"] = ""
    try:
        if geometry == "plane":
            cfg = PlaneConfig(d=params["d"], E=params["E"])
            xi = plane.xi_plane(cfg, settings)
            tag = "-"
        elif geometry == "wire":
            rho = params["rho"] if "rho" in params \
                else params["R"] + params["d"]
            cfg = WireConfig(R=params["R"], rho=rho, E=params["E"])
            row["d"] = cfg.d
            xi = wire.xi_wire(cfg, settings)
            tag = _regime_tag(cfg.d, cfg.R, cfg.E)
        else:
            cfg = HalfPlaneConfig(rho=params["rho"], phi=params["phi"],
                                  E=params["E"])
            xi = halfplane.xi_halfplane(cfg, settings)
            tag = "-"
        dw = -(xi.rho_comp + xi.phi_comp + xi.z_comp) / 3.0
        row.update(xi_rho=xi.rho_comp, xi_phi=xi.phi_comp, xi_z=xi.z_comp,
                   error_est=xi.error_estimate, shift_iso=dw, regime=tag)
    except (CpshiftError, ValueError) as exc:
        row.update(xi_rho=math.nan, xi_phi=math.nan, xi_z=math.nan,
                   error_est=math.nan, shift_iso=math.nan, regime="-",
                   error=str(exc).splitlines()[0])
    return row


def cmd_sweep(args) -> int:
    if args.var not in _SWEEP_VARS[args.geometry]:
        print(f"error: cannot sweep '{args.var}' for geometry "
              f"'{args.geometry}' (choose from "
              f"{', '.join(_SWEEP_VARS[args.geometry])})", file=sys.stderr)
        return 2
    settings = _settings(args.tol)
    fixed = {}
    if args.geometry == "plane":
        need = {"d", "E"}
    elif args.geometry == "wire":
        if args.var in ("rho", "d"):
            need = {"R", "E", args.var}
        else:
            need = {"R", "E", "rho" if args.rho is not None else "d"}
    else:
        need = {"rho", "phi", "E"}
    for name in need - {args.var}:
        val = getattr(args, name)
        if val is None:
            print(f"error: --{name} is required for this sweep",
                  file=sys.stderr)
            return 2
        fixed[name] = parse_angle(val) if name == "phi" else val
    lo, hi = parse_angle(args.min), parse_angle(args.max)
    values = _grid(lo, hi, args.count, args.spacing)
    tasks = [(args.geometry, fixed, args.var, float(v), settings)
             for v in values]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_point, tasks))
    else:
        rows = [_sweep_point(t) for t in tasks]
    si = _si_factor(args)
    if si != 1.0:
        for row in rows:
            row["shift_iso"] *= si
    header = (sorted({args.var} | set(fixed))
              + ["xi_rho", "xi_phi", "xi_z", "error_est", "shift_iso",
                 "regime", "error"])
    meta = {"command": "sweep", "geometry": args.geometry, "var": args.var,
            "min": lo, "max": hi, "count": args.count,
            "spacing": args.spacing, "fixed": fixed, "units": args.units,
            "tol": args.tol, "version": __version__}
    _write_rows(args.out, header, rows, args.format, meta)
    failed = sum(1 for r in rows if r["error"])
    if failed:
        print(f"{failed} of {len(rows)} rows failed", file=sys.stderr)
    return 0


# -- figures -----------------------------------------------------------


def _fig2_rows(args, settings):
    ratios = _grid(0.05, 50.0, args.points or 30, "log")
    rows = []
    R = args.R
    for r in ratios:
        d = r * R
        d4 = d ** 4
        exact = wire.xi_wire_retarded_limit(R, R + d, settings)
        big = wire.xi_wire_large_radius_approx(R, R + d, settings)
        small = wire.xi_wire_small_radius_approx(R, R + d, settings)
        rows.append({
            "d_over_R": r,
            "exact_rho": d4 * exact.rho_comp,
            "exact_phi": d4 * exact.phi_comp,
            "exact_z": d4 * exact.z_comp,
            "largeR_rho": d4 * big.rho_comp,
            "largeR_phi": d4 * big.phi_comp,
            "largeR_z": d4 * big.z_comp,
            "smallR_rho": d4 * small.rho_comp,
            "smallR_phi": d4 * small.phi_comp,
            "smallR_z": d4 * small.z_comp,
        })
    header = ["d_over_R", "exact_rho", "exact_phi", "exact_z",
              "largeR_rho", "largeR_phi", "largeR_z",
              "smallR_rho", "smallR_phi", "smallR_z"]
    return header, rows


def _fig_norm_rows(args, settings, comp):
    """fig3 / fig5: exact Xi component over the plane-mirror retarded
    value 1/(4 pi d^4 E), for each E, plus the retarded-limit curve."""
    ratios = _grid(0.05, 50.0, args.points or 20, "log")
    es = [float(t) for t in args.E_list.split(",")]
    rows = []
    R = args.R
    for r in ratios:
        d = r * R
        norm = 4.0 * math.pi * d ** 4
        row = {"d_over_R": r}
        for etxt, e in zip(args.E_list.split(","), es):
            xi = wire.xi_wire(WireConfig(R=R, rho=R + d, E=e), settings)
            row[f"norm_E{etxt}"] = norm * e * getattr(xi, comp)
        lim = wire.xi_wire_retarded_limit(R, R + d, settings)
        row["norm_retlim"] = norm * getattr(lim, comp)
        rows.append(row)
    header = (["d_over_R"] + [f"norm_E{t}" for t in args.E_list.split(",")]
              + ["norm_retlim"])
    return header, rows


def _fig4_rows(args, settings):
    rhos = [0.5, 1.0, 1.5, 2.0]
    phis = np.linspace(0.15, 2.0 * math.pi - 0.15, args.points or 24)
    rows = []
    for rho in rhos:
        for phi in phis:
            vec, degenerate = halfplane.force_direction(
                rho, float(phi), args.E, settings)
            rows.append({"rho": rho, "phi": float(phi),
                         "dir_rho": float(vec[0]), "dir_phi": float(vec[1]),
                         "degenerate": int(degenerate)})
    return ["rho", "phi", "dir_rho", "dir_phi", "degenerate"], rows


def _fig6_rows(args, settings):
    """Triple vs d*E at E = 1 (lengths in units of the wavelength) for a
    list of wire radii."""
    rads = [float(t) for t in args.R_list.split(",")]
    ds = _grid(0.1, 10.0, args.points or 20, "log")
    rows = []
    for d in ds:
        row = {"d_times_E": float(d)}
        for rtxt, R in zip(args.R_list.split(","), rads):
            xi = wire.xi_wire(WireConfig(R=R, rho=R + d, E=1.0), settings)
            row[f"xi_rho_R{rtxt}"] = xi.rho_comp
            row[f"xi_phi_R{rtxt}"] = xi.phi_comp
            row[f"xi_z_R{rtxt}"] = xi.z_comp
        rows.append(row)
    header = ["d_times_E"]
    for rtxt in args.R_list.split(","):
        header += [f"xi_rho_R{rtxt}", f"xi_phi_R{rtxt}", f"xi_z_R{rtxt}"]
    return header, rows


def cmd_figure(args) -> int:
    settings = _settings(args.tol)
    if args.name == "fig2":
        header, rows = _fig2_rows(args, settings)
    elif args.name == "fig3":
        header, rows = _fig_norm_rows(args, settings, "rho_comp")
    elif args.name == "fig5":
        header, rows = _fig_norm_rows(args, settings, "z_comp")
    elif args.name == "fig4_direction":
        header, rows = _fig4_rows(args, settings)
    else:
        header, rows = _fig6_rows(args, settings)
    meta = {"command": "figure", "name": args.name, "version": __version__,
            "tol": args.tol}
    for k in ("R", "E", "E_list", "R_list", "points"):
        if hasattr(args, k):
            meta[k] = getattr(args, k)
    _write_rows(args.out, header, rows, args.format, meta)
    return 0


def cmd_regimes(args) -> int:
    lam = args.lam if args.lam is not None else 1.0 / args.E
    reg = wire.classify_regime(args.d, args.R, lam)
    print(f"d={_fmt(args.d)} R={_fmt(args.R)} lambda={_fmt(lam)}")
    print(f"regime:  {reg.tag}")
    print(f"clear:   {reg.clear}")
    return 0


# -- parser ------------------------------------------------------------


def _add_common(p):
    p.add_argument("--tol", type=float, default=None,
                   help="relative quadrature tolerance")
    p.add_argument("--units", choices=("reduced", "si"), default="reduced")
    p.add_argument("--mu-si", dest="mu_si", type=float, default=1e-29,
                   help="dipole moment in C*m for --units si")
    p.add_argument("--length-si", dest="length_si", type=float, default=1e-6,
                   help="length unit in m for --units si")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cpshift",
        description="Casimir-Polder response functions near a plane, a "
                    "cylindrical wire, and a half-plane edge")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate one configuration")
    pe.add_argument("geometry", choices=("plane", "wire", "halfplane"))
    pe.add_argument("--d", type=float, help="plane: distance to mirror")
    pe.add_argument("--R", type=float, help="wire radius")
    pe.add_argument("--rho", type=float, help="radial coordinate")
    pe.add_argument("--phi", type=str, help="angle (pi-literals ok)")
    pe.add_argument("--E", type=float, default=0.0, help="transition energy")
    _add_common(pe)
    pe.set_defaults(func=cmd_eval)

    ps = sub.add_parser("sweep", help="sweep one variable over a grid")
    ps.add_argument("geometry", choices=("plane", "wire", "halfplane"))
    ps.add_argument("--var", required=True,
                    choices=("d", "rho", "phi", "E", "R"))
    ps.add_argument("--min", type=str, required=True)
    ps.add_argument("--max", type=str, required=True)
    ps.add_argument("--count", type=int, default=30)
    ps.add_argument("--spacing", choices=("linear", "log"), default="linear")
    ps.add_argument("--d", type=float)
    ps.add_argument("--R", type=float)
    ps.add_argument("--rho", type=float)
    ps.add_argument("--phi", type=str)
    ps.add_argument("--E", type=float)
    ps.add_argument("--jobs", type=int, default=1)
    ps.add_argument("--out", type=str, default=None,
                    help="output path ('-' or omitted: stdout)")
    ps.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_common(ps)
    ps.set_defaults(func=cmd_sweep)

    pf = sub.add_parser("figure", help="emit data for one figure")
    pf.add_argument("name", choices=("fig2", "fig3", "fig4_direction",
                                     "fig5", "fig6_combined"))
    pf.add_argument("--R", type=float, default=1.0, help="wire radius")
    pf.add_argument("--E", type=float, default=50.0,
                    help="transition energy (fig4_direction)")
    pf.add_argument("--E-list", dest="E_list", type=str, default="0.1,1,10",
                    help="comma list of energies (fig3/fig5)")
    pf.add_argument("--R-list", dest="R_list", type=str, default="0.5,1,2",
                    help="comma list of radii (fig6_combined)")
    pf.add_argument("--points", type=int, default=None,
                    help="grid size override")
    pf.add_argument("--out", type=str, default=None)
    pf.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_common(pf)
    pf.set_defaults(func=cmd_figure)

    pr = sub.add_parser("regimes", help="classify the asymptotic regime")
    pr.add_argument("--d", type=float, required=True)
    pr.add_argument("--R", type=float, required=True)
    pr.add_argument("--E", type=float)
    pr.add_argument("--lam", type=float,
                    help="wavelength (alternative to --E)")
    pr.set_defaults(func=cmd_regimes)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "regimes" and args.lam is None and args.E is None:
        print("error: regimes needs --E or --lam", file=sys.stderr)
        return 2
    if args.command == "eval":
        missing = []
        if args.geometry == "plane" and args.d is None:
            missing.append("--d")
        if args.geometry == "wire":
            missing += [f for f, v in (("--R", args.R), ("--rho", args.rho))
                        if v is None]
        if args.geometry == "halfplane":
            missing += [f for f, v in (("--rho", args.rho),
                                       ("--phi", args.phi)) if v is None]
        if missing:
            print(f"error: {args.geometry} eval needs "
                  + " ".join(missing), file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except CpshiftError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
