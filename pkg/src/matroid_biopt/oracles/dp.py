"""Dynamic program for uniform matroids (cardinality-constrained biobjective knapsack).

State ``(items seen, items chosen, b total)`` holds the least ``c`` total.  All
layers are kept, so every optimal selection can be recovered by walking back
through the states whose values are consistent; no predecessor lists needed.
Works for any integer ``b`` in ``0..beta``, not only binary ones.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..core import BicriteriaInstance, CostPair, OutcomeVector, Sense
from ..errors import InputError
from ..matroids import UniformMatroid
from .pareto import EfficientSet

_INF = 1 << 50


class UniformDP:
    """Layered DP table for one cost vector, shared by every ``k <= max_k``.

    Costs are in minimization orientation.
    """

    def __init__(self, c: Sequence[int], b: Sequence[int], max_k: int, beta: int):
        self.c = list(c)
        self.b = list(b)
        n = len(self.c)
        self.n = n
        self.max_k = max_k
        width = max_k * beta + 1
        table = np.full((n + 1, max_k + 1, width), _INF, dtype=np.int64)
        table[0, 0, 0] = 0
        for i in range(n):
            ci, bi = self.c[i], self.b[i]
            nxt = table[i].copy()
            if bi < width:
                cand = table[i, :-1, : width - bi] + ci
                np.minimum(nxt[1:, bi:], cand, out=nxt[1:, bi:])
            table[i + 1] = nxt
        self._table = table.tolist()
        self._memo: dict[tuple[int, int, int], list[tuple[int, ...]]] = {}

    def levels(self, k: int) -> dict[int, int]:
        """Least ``c`` for each reachable ``b`` total with exactly ``k`` items."""
        row = self._table[self.n][k]
        return {s: v for s, v in enumerate(row) if v < _INF}

    def nondominated(self, k: int) -> list[OutcomeVector]:
        out = []
        best = None
        for s, v in sorted(self.levels(k).items()):
            if best is None or v < best:
                out.append(OutcomeVector(v, s))
                best = v
        return out

    def optimal_subsets(self, k: int, s: int) -> list[tuple[int, ...]]:
        """Every ``k``-subset with ``b`` total ``s`` and least ``c`` for that total.

        Along any optimal walk the value equals ``table[i][j][s]``, so the
        subsets reaching a state depend on the state only; they are memoized
        across queries.
        """
        t = self._table
        c, b = self.c, self.b
        if t[self.n][k][s] >= _INF:
            return []
        memo = self._memo

        def walk(i, j, s):
            if i == 0:
                return [()]
            key = (i, j, s)
            hit = memo.get(key)
            if hit is not None:
                return hit
            item = i - 1
            v = t[i][j][s]
            out = []
            if t[item][j][s] == v:
                out.extend(walk(item, j, s))
            bi = b[item]
            if j > 0 and s >= bi and t[item][j - 1][s - bi] == v - c[item]:
                out.extend(x + (item,) for x in walk(item, j - 1, s - bi))
            memo[key] = out
            return out

        return walk(self.n, k, s)


@dataclass
class DpResult:
    """Per-level optima and the complete efficient set for one uniform instance.

    ``levels`` maps each reachable ``b`` total (instance orientation) to the best
    ``c`` and every basis attaining it.
    """

    k: int
    levels: dict[int, tuple[int, list[frozenset]]]
    efficient: EfficientSet
    nondominated: list[OutcomeVector] = field(default_factory=list)

    @property
    def bases(self):
        return self.efficient.bases

    @property
    def outcomes(self):
        return self.efficient.outcomes


def _check_uniform(instance: BicriteriaInstance) -> UniformMatroid:
    if not isinstance(instance.matroid, UniformMatroid):
        raise InputError("the dynamic program only handles uniform matroids")
    return instance.matroid


def dp_uniform(instance: BicriteriaInstance, beta_max: int | None = None,
               representatives_only: bool = False, all_levels: bool = True) -> DpResult:
    """Exact efficient set of a uniform-matroid instance.

    ``representatives_only`` keeps one basis per outcome (memory-bound runs);
    ``all_levels=False`` skips recovering bases for dominated ``b`` levels.
    """
    u = _check_uniform(instance)
    beta = instance.beta if beta_max is None else beta_max
    if max(instance.b) > beta:
        raise InputError(f"b values exceed beta_max={beta}")
    inst = instance.minimized()
    dp = UniformDP(inst.c, inst.b, u.k, beta)
    return _result_from_table(instance, dp, u.k, representatives_only, all_levels)


def _result_from_table(instance, dp: UniformDP, k: int, representatives_only: bool,
                       all_levels: bool) -> DpResult:
    nd = dp.nondominated(k)
    nd_levels = {y.b for y in nd}
    levels = {}
    bases, outcomes = [], []
    for s, v in sorted(dp.levels(k).items()):
        if not all_levels and s not in nd_levels:
            continue
        found = []
        for subset in dp.optimal_subsets(k, s):
            found.append(frozenset(subset))
            if representatives_only:
                break
        y = instance.to_original(OutcomeVector(v, s))
        levels[y.b] = (y.c, found)
        if s in nd_levels:
            bases.extend(found)
            outcomes.extend([y] * len(found))
    return DpResult(k, levels, EfficientSet(bases, outcomes),
                    [instance.to_original(y) for y in nd])


def dp_uniform_all_k(c: Sequence[int], b: Sequence[int], beta: int, ks: Sequence[int],
                     maximize: bool = True) -> dict[int, DpResult]:
    """One shared table for several ``k``; the inputs describe ``U_{k,n}`` profits or costs."""
    costs = [CostPair(int(x), int(y)) for x, y in zip(c, b)]
    sense = Sense.MAX if maximize else Sense.MIN
    n = len(costs)
    first = BicriteriaInstance(UniformMatroid(n, max(ks)), costs, sense, beta)
    inst = first.minimized()
    dp = UniformDP(inst.c, inst.b, max(ks), beta)
    out = {}
    for k in ks:
        instance = BicriteriaInstance(UniformMatroid(n, k), costs, sense, beta)
        out[k] = _result_from_table(instance, dp, k, False, False)
    return out
