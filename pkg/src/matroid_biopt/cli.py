"""Command-line front end.

Exit codes: 0 success, 2 unparsable instance, 3 infeasible instance, 4 usage
error (bad flags, or an algorithm that does not fit the instance).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from math import comb
from pathlib import Path

from . import __version__
from .core import BicriteriaInstance, OutcomeVector
from .errors import (
    EnumerationBudgetExceeded,
    InfeasibleInstanceError,
    InputError,
    ParseError,
)
from .esa import run_esa
from .experiments import KINDS, ExperimentSpec, run_experiment, to_csv
from .generators import DEFAULT_C_MAX, gen_graphic, gen_uniform
from .instances import InstanceFile, load
from .matroids import GraphicMatroid, UniformMatroid
from .oracles import (
    DEFAULT_MAX_ENUMERATION,
    adjacency_connected,
    complete_enumeration,
    count_bases,
    dp_uniform,
    efficient_suffix,
    naive_minimal_swap_solver,
)

EXIT_OK, EXIT_PARSE, EXIT_INFEASIBLE, EXIT_USAGE = 0, 2, 3, 4
ALGORITHMS = ("esa", "ce", "dp", "naive")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# solving ---------------------------------------------------------------------

def _point(y: OutcomeVector, basis) -> dict:
    return {"c": y.c, "b": y.b, "basis": sorted(basis)}


def _representatives(outcomes, bases) -> list[dict]:
    first = {}
    for y, basis in zip(outcomes, bases):
        if y not in first or sorted(basis) < sorted(first[y]):
            first[y] = basis
    return [_point(y, first[y]) for y in first]


def solve(instance: BicriteriaInstance, algorithm: str,
          max_enumeration: int | None = DEFAULT_MAX_ENUMERATION) -> dict:
    """Run one algorithm and return the JSON-ready report."""
    report = {"algorithm": algorithm, "front": [], "swaps": [], "timing_ms": 0.0, "counts": {}}
    t0 = time.perf_counter()
    if algorithm == "esa":
        if not instance.is_binary:
            raise UsageError("esa needs binary b values")
        front = run_esa(instance)
        report["front"] = [_point(p.outcome, p.basis) for p in front.points]
        report["swaps"] = [{"out": s.out, "in": s.in_, "cost": s.cost} for s in front.swaps]
        report["counts"] = {"YN": len(front), "swaps": len(front.swaps)}
    elif algorithm == "naive":
        if not instance.is_binary:
            raise UsageError("naive needs binary b values")
        steps = efficient_suffix(naive_minimal_swap_solver(instance))
        report["front"] = [_point(s.outcome, s.basis) for s in steps]
        report["swaps"] = [{"out": s.swap[0], "in": s.swap[1], "cost": s.swap[2]}
                           for s in steps[1:]]
        report["counts"] = {"YN": len(steps)}
    elif algorithm == "ce":
        try:
            res = complete_enumeration(instance, max_enumeration=max_enumeration)
        except EnumerationBudgetExceeded as exc:
            raise UsageError(f"{exc}; raise --max-enumeration to force it") from None
        eff = res.efficient_set()
        report["front"] = _representatives(eff.outcomes, eff.bases)
        report["efficient"] = sorted((_point(y, x) for y, x in zip(eff.outcomes, eff.bases)),
                                     key=lambda d: (-d["b"], d["c"], d["basis"]))
        report["counts"] = {"YN": len(report["front"]), "XE": len(eff), "X": res.n_bases}
    elif algorithm == "dp":
        if not isinstance(instance.matroid, UniformMatroid):
            raise UsageError("dp only handles uniform instances")
        res = dp_uniform(instance)
        report["front"] = _representatives(res.outcomes, res.bases)
        report["efficient"] = sorted((_point(y, x) for y, x in zip(res.outcomes, res.bases)),
                                     key=lambda d: (-d["b"], d["c"], d["basis"]))
        report["levels"] = [{"c": c, "b": b, "bases": sorted(sorted(x) for x in bases)}
                            for b, (c, bases) in sorted(res.levels.items(), reverse=True)]
        report["counts"] = {"YN": len(res.nondominated), "XE": len(res.efficient),
                            "X": comb(instance.matroid.n, instance.matroid.k)}
    else:
        raise UsageError(f"unknown algorithm {algorithm!r}")
    # one layout for every algorithm: b descending
    report["front"].sort(key=lambda p: -p["b"])
    report["timing_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return report


def report_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["c", "b", "basis"])
    for p in report.get("efficient", report["front"]):
        writer.writerow([p["c"], p["b"], " ".join(map(str, p["basis"]))])
    return buf.getvalue()


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _load_instance(path: str) -> tuple[InstanceFile, BicriteriaInstance]:
    try:
        f = load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return f, f.to_instance()


# subcommands -------------------------------------------------------------------

def cmd_solve(args) -> int:
    _, inst = _load_instance(args.file)
    report = solve(inst, args.algorithm, args.max_enumeration)
    if args.format == "csv":
        _emit(report_csv(report), args.output)
    else:
        _emit(json.dumps(report, indent=2) + "\n", args.output)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.kind == "graphic":
        if args.n is None or args.m is None:
            raise UsageError("gen graphic needs --n and --m")
        f = gen_graphic(args.n, args.m, c_max=args.c_max, seed=args.seed)
    else:
        if args.n is None:
            raise UsageError("gen uniform needs --n")
        f = gen_uniform(args.n, args.beta, seed=args.seed, k=args.k)
    _emit(f.dumps(), args.output)
    return EXIT_OK


def cmd_count(args) -> int:
    _, inst = _load_instance(args.file)
    m = inst.matroid
    if isinstance(m, GraphicMatroid):
        n = count_bases(m)
    elif isinstance(m, UniformMatroid):
        n = comb(m.n, m.k)
    else:  # pragma: no cover - files only describe the two kinds above
        raise UsageError("cannot count bases of this matroid")
    _emit(f"{n}\n", args.output)
    return EXIT_OK


def cmd_connected(args) -> int:
    _, inst = _load_instance(args.file)
    if isinstance(inst.matroid, UniformMatroid):
        eff = dp_uniform(inst).efficient
    else:
        try:
            eff = complete_enumeration(inst, max_enumeration=args.max_enumeration).efficient_set()
        except EnumerationBudgetExceeded as exc:
            raise UsageError(f"{exc}; raise --max-enumeration to force it") from None
    ok, n_comp = adjacency_connected(eff, inst.rank)
    _emit(json.dumps({"connected": ok, "components": n_comp, "XE": len(eff)}) + "\n", args.output)
    return EXIT_OK


def _sizes(kind: str, raw: list[str] | None) -> list:
    if not raw:
        return {"graphic-bench": [(10, 20)], "uniform-bench": [20], "beta-search": [20]}[kind]
    out = []
    for token in raw:
        try:
            if kind == "graphic-bench":
                n, m = token.split(":")
                out.append((int(n), int(m)))
            else:
                out.append(int(token))
        except ValueError:
            want = "N:M" if kind == "graphic-bench" else "N"
            raise UsageError(f"bad size {token!r}, expected {want}") from None
    return out


def cmd_experiment(args) -> int:
    spec = ExperimentSpec(
        kind=args.kind,
        sizes=_sizes(args.kind, args.sizes),
        instances=args.instances,
        betas=tuple(args.beta) if args.beta else (1,),
        seed=args.seed,
        max_enumeration=args.max_enumeration,
        timing=args.timing,
        jobs=args.jobs,
    )
    _emit(to_csv(run_experiment(spec)), args.output)
    return EXIT_OK


# argument parsing ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="matroid-biopt",
                     description="Biobjective matroid optimization with one binary objective.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, budget=False):
        p.add_argument("--output", "-o", help="write here instead of stdout")
        if budget:
            p.add_argument("--max-enumeration", type=int, default=DEFAULT_MAX_ENUMERATION,
                           help="refuse enumeration above this many bases (default %(default)s)")

    p = sub.add_parser("solve", help="compute the non-dominated set of an instance file")
    p.add_argument("file")
    p.add_argument("--algorithm", "-a", choices=ALGORITHMS, default="esa")
    p.add_argument("--format", "-f", choices=("json", "csv"), default="json")
    common(p, budget=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="write a seeded random instance")
    p.add_argument("kind", choices=("graphic", "uniform"))
    p.add_argument("--n", type=int, help="vertices (graphic) or elements (uniform)")
    p.add_argument("--m", type=int, help="edges (graphic)")
    p.add_argument("--k", type=int, help="rank (uniform, default n/2)")
    p.add_argument("--beta", type=int, default=1, help="largest b value (uniform)")
    p.add_argument("--c-max", type=int, default=DEFAULT_C_MAX, help="largest raw c (graphic)")
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("count", help="number of bases (spanning trees or k-subsets)")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("connected", help="is the complete efficient set connected?")
    p.add_argument("file")
    common(p, budget=True)
    p.set_defaults(func=cmd_connected)

    p = sub.add_parser("experiment", help="run a seeded benchmark, CSV to stdout")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--sizes", nargs="+", metavar="SIZE",
                   help="N:M pairs (graphic-bench) or N values")
    p.add_argument("--instances", type=int, default=10, help="instances per size or beta")
    p.add_argument("--beta", type=int, nargs="+", help="beta values (beta-search)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes; MATROID_BIOPT_THREADS overrides")
    p.add_argument("--timing", action="store_true", help="add wall-clock columns")
    common(p, budget=True)
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InfeasibleInstanceError as exc:
        print(f"infeasible instance: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (UsageError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
