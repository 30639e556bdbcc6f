"""Benchmark harness: graphic and uniform benchmarks and the nc-instance search.

Every instance gets its own random stream derived from ``(seed, kind, size,
index)``, so results do not depend on scheduling and a fixed seed gives
byte-identical CSV output (leave ``timing`` off for that).
"""
from __future__ import annotations

import csv
import io
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable, Iterable, Sequence

from .errors import EnumerationBudgetExceeded, InputError, InvariantViolation
from .esa import run_esa
from .generators import derive_rng, gen_graphic, gen_uniform
from .oracles import (
    DEFAULT_MAX_ENUMERATION,
    adjacency_connected,
    complete_enumeration,
    count_bases,
    dp_uniform,
    dp_uniform_all_k,
)

log = logging.getLogger(__name__)

THREADS_ENV = "MATROID_BIOPT_THREADS"
KIRCHHOFF_MAX_N = 100
KINDS = ("graphic-bench", "uniform-bench", "beta-search")


@dataclass
class ExperimentSpec:
    kind: str
    sizes: Sequence = ()
    instances: int = 10
    betas: Sequence[int] = (1,)
    seed: int = 0
    max_enumeration: int | None = DEFAULT_MAX_ENUMERATION
    timing: bool = False
    jobs: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown experiment {self.kind!r}; choose from {', '.join(KINDS)}")
        if self.instances < 1:
            raise InputError("need at least one instance")


def resolve_jobs(jobs: int) -> int:
    """``MATROID_BIOPT_THREADS`` wins over the command line when set."""
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            jobs = int(env)
        except ValueError:
            raise InputError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
    return max(1, jobs)


def _map(fn: Callable, tasks: list, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


def _ms(t0: float) -> float:
    return round((time.perf_counter() - t0) * 1000, 3)


# graphic benchmark ---------------------------------------------------------

def _graphic_row(task) -> dict:
    seed, n, m, i, max_enum, timing = task
    f = gen_graphic(n, m, rng=derive_rng(seed, "graphic", n, m, i))
    inst = f.to_instance()
    row = {"n": n, "m": m, "index": i, "E1": sum(cp.b for cp in f.costs)}
    t0 = time.perf_counter()
    front = run_esa(inst)
    esa_ms = _ms(t0)
    row["YN"] = len(front)
    row["trees"] = count_bases(inst.matroid) if n <= KIRCHHOFF_MAX_N else ""
    t0 = time.perf_counter()
    try:
        eff = complete_enumeration(inst, max_enumeration=max_enum).efficient_set()
        row["XE"] = len(eff)
        ce_ms = _ms(t0)
    except EnumerationBudgetExceeded:
        row["XE"] = ""
        ce_ms = ""
    if timing:
        row["esa_ms"] = esa_ms
        row["ce_ms"] = ce_ms
    return row


def graphic_bench(spec: ExperimentSpec) -> list[dict]:
    """Rows shaped like the spanning-tree table: size, red edges, |Y_N|, |X_E|, |X|."""
    tasks = [(spec.seed, n, m, i, spec.max_enumeration, spec.timing)
             for n, m in spec.sizes for i in range(spec.instances)]
    return _map(_graphic_row, tasks, resolve_jobs(spec.jobs))


# uniform benchmark -----------------------------------------------------------

def _uniform_row(task) -> dict:
    seed, n, i, timing = task
    f = gen_uniform(n, 1, rng=derive_rng(seed, "uniform", n, 1, i))
    row = {"n": n, "index": i, "YN": 0, "XE": 0}
    esa_ms = dp_ms = 0.0
    for k in range(1, n // 2 + 1):
        inst = replace(f, k=k).to_instance()
        t0 = time.perf_counter()
        front = run_esa(inst)
        esa_ms += _ms(t0)
        t0 = time.perf_counter()
        res = dp_uniform(inst)
        dp_ms += _ms(t0)
        if sorted(front.outcomes) != sorted(res.nondominated):
            raise InvariantViolation(f"swap algorithm and DP disagree on n={n}, k={k}, index {i}")
        row["YN"] += len(front)
        row["XE"] += len(res.efficient)
    if timing:
        row["esa_ms"] = round(esa_ms, 3)
        row["dp_ms"] = round(dp_ms, 3)
    return row


def uniform_bench(spec: ExperimentSpec) -> list[dict]:
    """Per instance, |Y_N| and |X_E| accumulated over ``k = 1..n/2``."""
    tasks = [(spec.seed, n, i, spec.timing) for n in spec.sizes for i in range(spec.instances)]
    return _map(_uniform_row, tasks, resolve_jobs(spec.jobs))


# nc-instance search ----------------------------------------------------------

def nc_pairs(c: Sequence[int], b: Sequence[int], beta: int, ks: Iterable[int]) -> list[int]:
    """Values of ``k`` whose complete efficient set is not connected."""
    results = dp_uniform_all_k(c, b, beta, list(ks))
    return [k for k, res in results.items() if not adjacency_connected(res.efficient, k)[0]]


def _beta_chunk(task) -> tuple[int, int]:
    seed, n, beta, start, stop = task
    ks = range(1, n // 2 + 1)
    nc = 0
    for i in range(start, stop):
        f = gen_uniform(n, beta, rng=derive_rng(seed, "beta", n, beta, i))
        bad = nc_pairs([cp.c for cp in f.costs], [cp.b for cp in f.costs], beta, ks)
        if bad:
            log.info("nc-instance: beta=%d index=%d k=%s", beta, i, bad)
        nc += len(bad)
    return beta, nc


def beta_search(spec: ExperimentSpec) -> list[dict]:
    """Count non-connected (instance, k) pairs per ``beta`` on ``U_{k,n}``, ``k = 1..n/2``."""
    n = spec.sizes[0] if spec.sizes else 20
    jobs = resolve_jobs(spec.jobs)
    chunk = max(1, -(-spec.instances // (4 * jobs)))
    tasks = [(spec.seed, n, beta, s, min(s + chunk, spec.instances))
             for beta in spec.betas for s in range(0, spec.instances, chunk)]
    totals = {beta: 0 for beta in spec.betas}
    for beta, nc in _map(_beta_chunk, tasks, jobs):
        totals[beta] += nc
    return [{"n": n, "beta": beta, "instances": spec.instances, "nc": totals[beta]}
            for beta in spec.betas]


RUNNERS = {"graphic-bench": graphic_bench, "uniform-bench": uniform_bench, "beta-search": beta_search}


def run_experiment(spec: ExperimentSpec) -> list[dict]:
    return RUNNERS[spec.kind](spec)


def to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    fields = list(dict.fromkeys(key for row in rows for key in row))
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()
