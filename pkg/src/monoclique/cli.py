"""Command-line front end: gen, census, tree, bounds, figure, check.

Output is JSON or CSV on stdout, or in the file named by ``--out``.  Exit
codes: 0 success, 1 a verification suite failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import bounds
from .census import Convention, SingletonMode, count_profile, per_vertex_counts
from .coloring import (
    Color,
    ColoringFormatError,
    clique_union_coloring,
    cycle_coloring,
    join_colorings,
    paley_coloring,
    random_coloring,
    read_coloring,
    write_coloring,
)
from .ramsey_tree import (
    HALF,
    BiasSchedule,
    build_aux_bipartite,
    build_rrt,
    format_full_path,
    grt_level_counts,
    rt_full_paths,
)
from .verify import SUITES


class UsageError(Exception):
    pass


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(args, obj) -> str:
    if args.pretty:
        return json.dumps(obj, indent=2) + "\n"
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _read_input(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return read_coloring(text)


def _require(args, *names) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.family if hasattr(args, 'family') else args.formula} needs {', '.join(missing)}")


# ---------------------------------------------------------------- gen

def cmd_gen(args) -> int:
    fam = args.family
    if fam == "random":
        _require(args, "n")
        g = random_coloring(args.n, args.seed)
    elif fam == "paley":
        _require(args, "q")
        g = paley_coloring(args.q)
    elif fam == "cycle":
        _require(args, "n")
        g = cycle_coloring(args.n)
    elif fam == "clique_union":
        _require(args, "t", "s")
        g = clique_union_coloring(args.t, args.s)
    else:
        # random(n, seed) joined to clique_union(t, s)
        _require(args, "n", "t", "s")
        g = join_colorings(random_coloring(args.n, args.seed), clique_union_coloring(args.t, args.s),
                           Color(args.cross))
    _emit(args, write_coloring(g))
    return 0


# ---------------------------------------------------------------- census

def cmd_census(args) -> int:
    g = _read_input(args.input)
    conv = Convention(SingletonMode(args.convention), args.include_empty)
    p = count_profile(g, conv, max_size=args.max_size, workers=args.threads)
    out = p.to_json()
    if args.per_vertex:
        out["per_vertex"] = [str(c) for c in per_vertex_counts(g, conv)]
    if args.pretty:
        rows = ["size  red  blue"] + [f"{k}  {r}  {b}" for k, (r, b) in enumerate(zip(p.red, p.blue)) if r or b]
        text = "\n".join(rows) + f"\ntotal {out['total']}  average {out['average']}  max {out['max_size']}\n"
        _emit(args, text)
    else:
        _emit(args, _json(args, out))
    return 0


# ---------------------------------------------------------------- tree

def cmd_tree(args) -> int:
    g = _read_input(args.input)
    if args.kind == "grt":
        stats = grt_level_counts(g, args.max_level)
        text = "level,node_count\n" + "".join(f"{i},{c}\n" for i, c in enumerate(stats.counts))
    elif args.kind == "rrt":
        schedule = BiasSchedule.parse(args.bias_schedule) if args.bias_schedule else HALF
        levels = build_rrt(g, schedule)
        rows = levels.levels if args.max_level is None else levels.levels[: args.max_level + 1]
        text = "level,color,q,bag_size,node_count\n" + "".join(
            f"{lv.level},{lv.color},{lv.q},{lv.bag_size},{lv.node_count}\n" for lv in rows)
    elif args.kind == "paths":
        text = "".join(format_full_path(p) + "\n" for p in rt_full_paths(g))
    else:
        text = _json(args, build_aux_bipartite(g).summary())
    _emit(args, text)
    return 0


# ---------------------------------------------------------------- bounds

def _bv(name, params, value: bounds.BoundValue) -> dict:
    return {"formula": name, "params": params, "value": str(value), "mode": value.mode}


def _flag(name, params, truth) -> dict:
    return {"formula": name, "params": params, "value": "null" if truth is None else str(truth).lower(),
            "mode": "exact"}


# name -> (required parameters, evaluator returning the report dict)
FORMULAS = {
    "ramsey_binomial": (("s", "t"), lambda a, p: _bv("ramsey_binomial", p, bounds.ramsey_binomial_bound(a.s, a.t))),
    "erdos_ct_lower": (("t", "R"), lambda a, p: _bv("erdos_ct_lower", p, bounds.erdos_ct_bounds(a.t, a.R)[0])),
    "erdos_ct_upper": (("t", "R"), lambda a, p: _bv("erdos_ct_upper", p, bounds.erdos_ct_bounds(a.t, a.R)[1])),
    "thm_lower": (("t",), lambda a, p: _bv("thm_lower", p, bounds.thm_lower_size_t(a.t))),
    "cor_lower": (("n", "k"), lambda a, p: _bv("cor_lower", p, bounds.cor_lower_size_k(a.n, a.k))),
    "szekely_product": (("t", "k"), lambda a, p: _bv("szekely_product", p, bounds.szekely_upper_product(a.t, a.k))),
    "g": (("c",), lambda a, p: _bv("g", p, bounds.profile_function("g", a.c))),
    "g1": (("c",), lambda a, p: _bv("g1", p, bounds.profile_function("g1", a.c))),
    "g2": (("c",), lambda a, p: _bv("g2", p, bounds.profile_function("g2", a.c))),
    "entropy": (("p",), lambda a, p: _bv("entropy", p, bounds.binary_entropy(a.p))),
    "barnes_g": (("n",), lambda a, p: _bv("barnes_g", p, bounds.log_barnes_g(a.n, a.mode or "exact"))),
    "ln_estimate1": (("x",), lambda a, p: _flag("ln_estimate1", p, bounds.ln_estimates_check(a.x)[0])),
    "ln_estimate2": (("x",), lambda a, p: _flag("ln_estimate2", p, bounds.ln_estimates_check(a.x)[1])),
    "binom_shift": (("n", "k", "t"), lambda a, p: _flag("binom_shift", p, bounds.binom_shift_check(a.n, a.k, a.t))),
    "f_delta": (("delta",), lambda a, p: _bv("f_delta", p, bounds.f_delta(a.delta))),
    "f_delta_min": ((), lambda a, p: _bv("f_delta_min", p, bounds.f_delta_grid_min(a.step or "0.0001")[1])),
    "subset_sum_closed": (("t", "N"), lambda a, p: _bv(
        "subset_sum_closed", p, bounds.BoundValue.of(bounds.subset_sum_identity(a.t, a.N)[0]))),
    "subset_sum_truncated": (("t", "N"), lambda a, p: _bv(
        "subset_sum_truncated", p, bounds.BoundValue.of(bounds.subset_sum_identity(a.t, a.N)[1]))),
    "pentagonal": (("m",), lambda a, p: _bv("pentagonal", p, bounds.pentagonal_partial_product(a.m))),
    "floor_t_over_sqrt2": (("t",), lambda a, p: _bv(
        "floor_t_over_sqrt2", p, bounds.BoundValue.of(bounds.thm36_params(a.t)[0]))),
    "floor_t_over_sqrt2_m": (("t",), lambda a, p: _bv(
        "floor_t_over_sqrt2_m", p, bounds.thm36_params(a.t)[1])),
}
PARAM_NAMES = ("s", "t", "R", "n", "k", "c", "p", "x", "delta", "N", "m", "mode", "step")


def cmd_bounds(args) -> int:
    required, evaluate = FORMULAS[args.formula]
    _require(args, *required)
    params = {k: str(getattr(args, k)) for k in PARAM_NAMES if getattr(args, k) is not None}
    _emit(args, _json(args, evaluate(args, params)))
    return 0


# ---------------------------------------------------------------- figure

def figure_csv(step: Fraction) -> str:
    """Rows c = 0, step, 2 step, ... below 2 (the end of g2's domain)."""
    if step <= 0:
        raise ValueError("step must be positive")
    lines = ["c,g1,g2"]
    i = 0
    while i * step < 2:
        c = i * step
        g1 = float(bounds.profile_function("g1", c))
        g2 = float(bounds.profile_function("g2", c))
        lines.append(f"{float(c):.10g},{g1:.15g},{g2:.15g}")
        i += 1
    return "\n".join(lines) + "\n"


def cmd_figure(args) -> int:
    _emit(args, figure_csv(bounds.to_fraction(args.step)))
    return 0


# ---------------------------------------------------------------- check

def cmd_check(args) -> int:
    report = SUITES[args.suite](args.seeds, args.threads)
    if args.pretty:
        status = "PASS" if report.passed else "FAIL"
        lines = [f"{report.suite}: {status} ({report.instances} instances, {report.checks} checks,"
                 f" {len(report.failures)} failures)"]
        for f in report.failures:
            lines.append(f"  {f.instance} [{f.check}] {f.where}: {f.lhs} {f.relation} {f.rhs}")
        if args.timing:
            lines.append(f"  wall time {report.wall_time:.3f} s")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, _json(args, report.to_json(timing=args.timing)))
    return 0 if report.passed else 1


# ---------------------------------------------------------------- parser

def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument("--threads", type=_positive, default=1, help="worker processes")

    parser = argparse.ArgumentParser(prog="monoclique", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="generate a coloring file")
    gen.add_argument("--family", required=True, choices=["random", "paley", "cycle", "clique_union", "join"])
    gen.add_argument("--n", type=int)
    gen.add_argument("--q", type=int)
    gen.add_argument("--t", type=int)
    gen.add_argument("--s", type=int)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--cross", choices=["R", "B"], default="B", help="color of join cross pairs")
    gen.set_defaults(func=cmd_gen)

    census = sub.add_parser("census", parents=[common], help="count monochromatic complete subgraphs")
    census.add_argument("--in", dest="input", required=True, help="coloring file, or - for stdin")
    census.add_argument("--convention", choices=["both", "blue_only"], default="both")
    census.add_argument("--include-empty", action="store_true")
    census.add_argument("--max-size", type=int, help="only count sizes up to this")
    census.add_argument("--per-vertex", action="store_true", help="add per-vertex counts")
    census.set_defaults(func=cmd_census)

    tree = sub.add_parser("tree", parents=[common], help="Ramsey tree level reports")
    tree.add_argument("--in", dest="input", required=True)
    tree.add_argument("--kind", choices=["grt", "rrt", "paths", "aux"], required=True)
    tree.add_argument("--bias-schedule", help='e.g. "0:0.5,8:0.4"')
    tree.add_argument("--max-level", type=int)
    tree.set_defaults(func=cmd_tree)

    bnd = sub.add_parser("bounds", parents=[common], help="evaluate a named formula")
    bnd.add_argument("--formula", required=True, choices=sorted(FORMULAS))
    for name in ("s", "t", "R", "n", "k", "N", "m"):
        bnd.add_argument(f"--{name}", type=int)
    for name in ("c", "p", "x", "delta", "step"):
        bnd.add_argument(f"--{name}", type=str)
    bnd.add_argument("--mode", choices=["exact", "asymptotic"])
    bnd.set_defaults(func=cmd_bounds)

    fig = sub.add_parser("figure", parents=[common], help="g1 and g2 curve data as CSV")
    fig.add_argument("--step", default="0.001")
    fig.set_defaults(func=cmd_figure)

    chk = sub.add_parser("check", parents=[common], help="run a verification suite")
    chk.add_argument("--suite", required=True, choices=sorted(SUITES))
    chk.add_argument("--seeds", type=_positive, help="number of seeds (suite default if omitted)")
    chk.add_argument("--timing", action="store_true", help="include wall time (output no longer deterministic)")
    chk.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ColoringFormatError, ValueError, OSError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
