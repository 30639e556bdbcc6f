"""Complete enumeration of bases, and the per-level bookkeeping built on it."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterator

from ..core import BicriteriaInstance, Matroid, MatroidMinor, OutcomeVector
from ..errors import EnumerationBudgetExceeded
from ..matroids import GraphicMatroid, UniformMatroid
from .kirchhoff import count_bases
from .pareto import EfficientSet, pareto_filter

DEFAULT_MAX_ENUMERATION = 2_000_000


def _graphic_bases(g: GraphicMatroid) -> Iterator[tuple[int, ...]]:
    # include/exclude every edge in id order; including contracts the edge,
    # excluding deletes it. Union-find without compression so unions can be undone.
    edges = g.edges
    m = len(edges)
    need = g.n_vertices - g.n_components()
    parent = list(range(g.n_vertices + 1))
    size = [1] * (g.n_vertices + 1)

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    chosen: list[int] = []
    frames: list[tuple[int, int, int]] = []  # (edge position, attached root, host root)
    i = 0
    while True:
        while len(chosen) < need and m - i >= need - len(chosen):
            u, v = edges[i]
            ru, rv = find(u), find(v)
            if ru != rv:
                if size[ru] < size[rv]:
                    ru, rv = rv, ru
                parent[rv] = ru
                size[ru] += size[rv]
                chosen.append(i)
                frames.append((i, rv, ru))
            i += 1
        if len(chosen) == need:
            yield tuple(chosen)
        if not frames:
            return
        pos, rv, ru = frames.pop()
        parent[rv] = rv
        size[ru] -= size[rv]
        chosen.pop()
        i = pos + 1


def _generic_bases(minor: MatroidMinor) -> Iterator[tuple[int, ...]]:
    ground = sorted(minor.ground)
    need = minor.rank()
    chosen: list[int] = []

    def rec(i):
        if len(chosen) == need:
            yield tuple(chosen)
            return
        if len(ground) - i < need - len(chosen):
            return
        e = ground[i]
        chosen.append(e)
        if minor.is_independent(chosen):
            yield from rec(i + 1)
        chosen.pop()
        yield from rec(i + 1)

    yield from rec(0)


def enumerate_bases(matroid: Matroid | MatroidMinor) -> Iterator[tuple[int, ...]]:
    """Every basis exactly once, as a sorted tuple of element ids."""
    if isinstance(matroid, MatroidMinor):
        if matroid.contracted or len(matroid.ground) != matroid.base.n_elements:
            return _generic_bases(matroid)
        matroid = matroid.base
    if isinstance(matroid, GraphicMatroid):
        return _graphic_bases(matroid)
    if isinstance(matroid, UniformMatroid):
        return itertools.combinations(range(matroid.n), matroid.k)
    return _generic_bases(matroid.minor())


def basis_count_estimate(matroid: Matroid) -> int | None:
    if isinstance(matroid, GraphicMatroid):
        return count_bases(matroid)
    if isinstance(matroid, UniformMatroid):
        return comb(matroid.n, matroid.k)
    return None


@dataclass
class EnumerationResult:
    """Best ``c`` per ``b`` value together with every basis attaining it.

    Levels and outcomes are kept in minimization orientation; ``instance`` is the
    original (possibly maximizing) instance used to map results back.
    """

    instance: BicriteriaInstance
    n_bases: int
    levels: dict[int, tuple[int, list[tuple[int, ...]]]]
    outcomes: set[OutcomeVector] | None = field(default=None)

    def efficient_set(self) -> EfficientSet:
        entries = [(OutcomeVector(c, b), basis)
                   for b, (c, bases) in self.levels.items() for basis in bases]
        eff = pareto_filter(entries)
        inst = self.instance
        return EfficientSet([frozenset(x) for x in eff.bases],
                            [inst.to_original(y) for y in eff.outcomes])

    def all_outcomes(self) -> set[OutcomeVector]:
        if self.outcomes is None:
            raise ValueError("enumeration ran without collect_outcomes")
        return {self.instance.to_original(y) for y in self.outcomes}


def complete_enumeration(instance: BicriteriaInstance,
                         max_enumeration: int | None = DEFAULT_MAX_ENUMERATION,
                         collect_outcomes: bool = False) -> EnumerationResult:
    """Visit every basis once, keeping the cheapest ones for each ``b`` value."""
    if max_enumeration is not None:
        estimate = basis_count_estimate(instance.matroid)
        if estimate is not None and estimate > max_enumeration:
            raise EnumerationBudgetExceeded(estimate, max_enumeration)
    inst = instance.minimized()
    c = inst.c
    b = inst.b
    levels: dict[int, tuple[int, list]] = {}
    seen: set | None = set() if collect_outcomes else None
    count = 0
    for basis in enumerate_bases(inst.matroid):
        count += 1
        cc = bb = 0
        for e in basis:
            cc += c[e]
            bb += b[e]
        if seen is not None:
            seen.add(OutcomeVector(cc, bb))
        cur = levels.get(bb)
        if cur is None or cc < cur[0]:
            levels[bb] = (cc, [basis])
        elif cc == cur[0]:
            cur[1].append(basis)
    return EnumerationResult(instance, count, levels, seen)
