"""Command line front end.

Every subcommand prints a report ``{"experiment", "system", "params", "rows",
"version"}`` as JSON (default) or CSV. Exit status is 0 on success, 1 on invalid
input and 2 when a cap is hit or a wall crossing cannot be decided.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys as _sys
from dataclasses import replace
from fractions import Fraction
from pathlib import Path

from . import __version__
from .core import Caps, CoxeterSystem
from .errors import (
    CapExceededError,
    InfeasibleError,
    InvalidInputError,
    PrecisionError,
    UndeterminedCrossingError,
)
from .formats import bundled_system, load_system, parse_path, system_to_dict
from .paths import EdgePath, QuasiGeodesicParams, bracket_report, geodesic, tracking_distance
from .systems import grid
from .tracking import (
    geodesic_approximation,
    periodic_path,
    spiral_path,
    straighten,
    tracking_correspondence,
)
from .walls import dilworth_partition, estimate_parallel_wall_constant, walls_separating

CAP_FIELDS = ("closure", "order", "ball", "depth")


def _num(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    return x


# -- argument handling ------------------------------------------------------


def _caps(args) -> Caps:
    caps = Caps()
    for name in CAP_FIELDS:
        env = os.environ.get(f"COXWALLS_CAP_{name.upper()}")
        if env is not None:
            try:
                caps = replace(caps, **{name: int(env)})
            except ValueError:
                raise InvalidInputError(f"COXWALLS_CAP_{name.upper()} must be an integer, got {env!r}") from None
        flag = getattr(args, f"cap_{name}")
        if flag is not None:
            caps = replace(caps, **{name: flag})
    return caps


def _system(args) -> CoxeterSystem:
    caps = _caps(args)
    if args.system is None:
        if args.command == "spiral":
            return grid(caps=caps, engine=args.engine)
        raise InvalidInputError("--system is required")
    p = Path(args.system)
    if p.is_file():
        return load_system(p, engine=args.engine, caps=caps)
    # fall back to the shipped files so `--system grid.json` works anywhere
    return bundled_system(p.stem if p.suffix == ".json" else p.name, engine=args.engine, caps=caps)


def _path(sys: CoxeterSystem, args, suffix="") -> EdgePath:
    f = getattr(args, "path" + suffix)
    if f:
        return parse_path(Path(f).read_bytes(), sys)
    letters = getattr(args, "letters" + suffix)
    if letters is None and not suffix:
        letters = args.word
    if letters is None:
        raise InvalidInputError(f"need --path{suffix} or --letters{suffix}")
    return EdgePath.from_word(sys, letters, getattr(args, "start" + suffix) or None)


def _endpoints(sys: CoxeterSystem, args):
    if args.word is not None:
        return sys.identity, sys.element(args.word)
    if args.to is None:
        raise InvalidInputError("need --word or --from/--to")
    return sys.element(args.from_ or ""), sys.element(args.to)


# -- subcommands ------------------------------------------------------------


def cmd_reduce(sys, args):
    w = sys.word(args.word if args.word is not None else (args.letters or ""))
    nf = sys.normal_form(w)
    return {"word": sys.format_word(w)}, [{"word": sys.format_word(w), "normal_form": sys.format_word(nf.word), "length": len(nf)}]


def cmd_dist(sys, args):
    a, b = _endpoints(sys, args)
    return {"from": str(a), "to": str(b)}, [{"from": str(a), "to": str(b), "distance": sys.distance(a, b)}]


def cmd_geodesic(sys, args):
    a, b = _endpoints(sys, args)
    g = geodesic(sys, a, b)
    return {"from": str(a), "to": str(b)}, [{"from": str(a), "to": str(b), "geodesic": sys.format_word(g.letters)}]


def cmd_walls(sys, args):
    a, b = _endpoints(sys, args)
    rows = [
        {"index": i, "reflection": str(q.reflection), "anchor": str(q.anchor[0]), "anchor_letter": sys.generators[q.anchor[1]]}
        for i, q in enumerate(walls_separating(sys, a, b))
    ]
    return {"from": str(a), "to": str(b)}, rows


def cmd_bracket(sys, args):
    p = _path(sys, args)
    rep = bracket_report(sys, p)
    return {"path": str(p)}, [{"path": str(p), "per_vertex": rep.per_vertex, "max": rep.max}]


def cmd_approx(sys, args):
    p = _path(sys, args)
    r = geodesic_approximation(sys, p)
    return {"path": str(p)}, [
        {
            "path": str(p),
            "approx": sys.format_word(r.approx.letters),
            "L_achieved": r.L_achieved,
            "segment_boundaries": r.segment_boundaries,
        }
    ]


def cmd_straighten(sys, args):
    p = _path(sys, args)
    r = straighten(sys, p, sys.caps.depth)
    return {"path": str(p)}, [
        {
            "path": str(p),
            "geodesic": sys.format_word(r.geodesic.letters),
            "K_achieved": r.K_achieved,
            "splices": sum(e.kind in ("delete", "recurse") for e in r.trace),
        }
    ]


def cmd_dilworth(sys, args):
    a, b = _endpoints(sys, args)
    part = dilworth_partition(sys, a, b, sys.caps.order)
    rows = [{"chain": k, "walls": [str(q.reflection) for q in c]} for k, c in enumerate(part.chains)]
    return {"from": str(a), "to": str(b)}, rows


def cmd_width(sys, args):
    a, b = _endpoints(sys, args)
    w = dilworth_partition(sys, a, b, sys.caps.order).width
    return {"from": str(a), "to": str(b)}, [{"from": str(a), "to": str(b), "width": w}]


def cmd_pwconst(sys, args):
    rows = []
    for r in range(1, args.radius + 1) if args.sweep else [args.radius]:
        est = estimate_parallel_wall_constant(sys, args.n, r, sys.caps.order)
        rows.append({"n": args.n, "radius": r, "estimate": est.estimate})
    return {"n": args.n, "radius": args.radius}, rows


def cmd_spiral(sys, args):
    rows = []
    for w in range(1, args.windings + 1):
        p = spiral_path(w, args.c, args.growth, args.per_arm, sys=sys)
        r = straighten(sys, p, sys.caps.depth)
        rows.append(
            {
                "windings": w,
                "length": len(p),
                "bracket_max": bracket_report(sys, p).max,
                "K_achieved": r.K_achieved,
                "geodesic_length": len(r.geodesic),
            }
        )
    params = {"windings": args.windings, "c": args.c, "growth": args.growth, "per_arm": args.per_arm}
    return params, rows


def cmd_axis(sys, args):
    g = sys.element(args.word if args.word is not None else (args.letters or ""))
    rows = []
    for k in range(1, args.k + 1):
        p = periodic_path(sys, g, k)
        r = straighten(sys, p, sys.caps.depth)
        rows.append({"k": k, "length": len(p), "bracket_max": bracket_report(sys, p).max, "K_achieved": r.K_achieved})
    return {"g": str(g), "k": args.k}, rows


def cmd_doubletrack(sys, args):
    p1 = _path(sys, args)
    p2 = _path(sys, args, "2")
    params2 = None
    if args.lam is not None or args.eps is not None:
        params2 = QuasiGeodesicParams(Fraction(args.lam or "1"), Fraction(args.eps or "0"))
    K = args.K if args.K is not None else tracking_distance(sys, p1, p2)
    rep = tracking_correspondence(sys, p1, p2, K, params2)
    row = {
        "a_of": rep.a_of,
        "K": rep.K,
        "bound": _num(rep.bound_checked),
        "reverse_distance": rep.reverse_distance,
        "holds": rep.holds,
    }
    return {"path": str(p1), "path2": str(p2), "K": K}, [row]


COMMANDS = {
    "reduce": cmd_reduce,
    "dist": cmd_dist,
    "geodesic": cmd_geodesic,
    "walls": cmd_walls,
    "bracket": cmd_bracket,
    "approx": cmd_approx,
    "straighten": cmd_straighten,
    "dilworth": cmd_dilworth,
    "width": cmd_width,
    "pwconst": cmd_pwconst,
    "spiral": cmd_spiral,
    "axis": cmd_axis,
    "doubletrack-check": cmd_doubletrack,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--system", help="system JSON file (or a bundled name: dinf, grid, a2tilde)")
    common.add_argument("--path", help="path JSON file")
    common.add_argument("--word", help="inline word")
    common.add_argument("--letters", help="inline path letters")
    common.add_argument("--start", default="", help="start vertex for inline paths")
    common.add_argument("--from", dest="from_", help="first endpoint")
    common.add_argument("--to", help="second endpoint")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--engine", choices=("roots", "tits"), default="roots")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    for name in CAP_FIELDS:
        common.add_argument(f"--cap-{name}", type=int, default=None, help=f"override the {name} cap")

    parser = argparse.ArgumentParser(prog="coxwalls", description="Wall geometry of Coxeter systems.")
    parser.add_argument("--version", action="version", version=f"coxwalls {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    subs = {name: sub.add_parser(name, parents=[common]) for name in COMMANDS}
    subs["pwconst"].add_argument("--n", type=int, default=1)
    subs["pwconst"].add_argument("--radius", type=int, default=6)
    subs["pwconst"].add_argument("--sweep", action="store_true", help="report every radius up to --radius")
    subs["spiral"].add_argument("--windings", type=int, default=6)
    subs["spiral"].add_argument("--c", type=float, default=4)
    subs["spiral"].add_argument("--growth", type=float, default=1.7)
    subs["spiral"].add_argument("--per-arm", action="store_true")
    subs["axis"].add_argument("--k", type=int, default=10)
    dt = subs["doubletrack-check"]
    dt.add_argument("--path2")
    dt.add_argument("--letters2")
    dt.add_argument("--start2", default="")
    dt.add_argument("--K", type=int)
    dt.add_argument("--lambda", dest="lam")
    dt.add_argument("--epsilon", dest="eps")
    return parser


# -- output -----------------------------------------------------------------


def _csv_cell(v):
    if isinstance(v, (list, tuple)):
        return " ".join(str(_csv_cell(x)) for x in v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=False) + "\n"
    rows = report["rows"]
    buf = io.StringIO()
    fields = list(dict.fromkeys(k for r in rows for k in r))
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: _csv_cell(v) for k, v in r.items()})
    return buf.getvalue()


def _emit(text: str, args) -> None:
    if args.output:
        Path(args.output).write_text(text)
    else:
        _sys.stdout.write(text)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 1 if e.code else 0
    report = {"experiment": args.command, "system": None, "params": {}, "rows": [], "version": __version__}
    try:
        sys = _system(args)
        report["system"] = system_to_dict(sys)
        params, rows = COMMANDS[args.command](sys, args)
        report["params"] = {**params, "engine": sys.engine, "caps": vars(sys.caps)}
        report["rows"] = [{k: _num(v) for k, v in r.items()} for r in rows]
    except (CapExceededError, UndeterminedCrossingError, PrecisionError) as e:
        err = {"type": type(e).__name__, "message": str(e)}
        if isinstance(e, UndeterminedCrossingError):
            err["pair"] = [str(q.reflection) for q in e.pair]
        if isinstance(e, CapExceededError):
            err["cap"] = {"what": e.what, "value": e.cap}
        report["error"] = err
        _emit(json.dumps(report, indent=2) + "\n", args)
        print(f"coxwalls: {e}", file=_sys.stderr)
        return 2
    except (InvalidInputError, InfeasibleError, OSError) as e:
        print(f"coxwalls: error: {e}", file=_sys.stderr)
        return 1
    _emit(render(report, args.format), args)
    return 0


def main() -> None:
    raise SystemExit(run())


__all__ = ["build_parser", "main", "render", "run"]
