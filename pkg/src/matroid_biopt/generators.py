"""Seeded random instances.

All randomness comes from :class:`random.Random` (Mersenne Twister).  String
seeds are hashed with SHA-512 by the standard library, so ``derive_rng`` gives
the same stream on every platform and Python 3 release.
"""
from __future__ import annotations

import random

from .core import CostPair, Sense
from .errors import InputError
from .instances import InstanceFile

DEFAULT_C_MAX = 50_000


def derive_rng(seed, *tags) -> random.Random:
    """Independent stream for ``seed`` and a tuple of tags (e.g. instance index)."""
    return random.Random(":".join(str(x) for x in (seed, *tags)))


def gen_graphic(n: int, m: int, c_max: int = DEFAULT_C_MAX, seed=0,
                rng: random.Random | None = None) -> InstanceFile:
    """Connected simple graph: random spanning tree first, then random extra edges.

    Costs are uniform in ``1..c_max`` shifted so the cheapest edge costs 0; ``b``
    is a fair coin.
    """
    if n < 2:
        raise InputError("need at least two vertices")
    if not n - 1 <= m <= n * (n - 1) // 2:
        raise InputError(f"m must lie in [{n - 1}, {n * (n - 1) // 2}] for n={n}")
    rng = rng or derive_rng(seed, "graphic", n, m)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    present = set()
    edges = []
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        key = (min(u, v), max(u, v))
        present.add(key)
        edges.append(key)
    extra = m - (n - 1)
    total = n * (n - 1) // 2
    if extra > (total - (n - 1)) // 2:
        pool = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if (u, v) not in present]
        edges.extend(rng.sample(pool, extra))
    else:
        while extra:
            u, v = rng.randint(1, n), rng.randint(1, n)
            key = (min(u, v), max(u, v))
            if u != v and key not in present:
                present.add(key)
                edges.append(key)
                extra -= 1
    rng.shuffle(edges)
    raw = [rng.randint(1, c_max) for _ in edges]
    low = min(raw)
    costs = tuple(CostPair(x - low, rng.randint(0, 1)) for x in raw)
    return InstanceFile("graphic", Sense.MIN, costs, n_vertices=n, edges=tuple(edges))


def gen_uniform(n: int, beta: int = 1, seed=0, k: int | None = None,
                rng: random.Random | None = None) -> InstanceFile:
    """Profit instance on ``U_{k,n}`` (maximization).

    ``c`` values are drawn from ``0..10n`` and sorted non-decreasingly, ``b``
    values from ``0..beta`` sorted non-increasingly, then paired by position.
    """
    if n < 1 or beta < 1:
        raise InputError("need n >= 1 and beta >= 1")
    k = max(1, n // 2) if k is None else k
    if not 0 < k <= n:
        raise InputError("need 0 < k <= n")
    rng = rng or derive_rng(seed, "uniform", n, beta)
    c = sorted(rng.randint(0, 10 * n) for _ in range(n))
    b = sorted((rng.randint(0, beta) for _ in range(n)), reverse=True)
    costs = tuple(CostPair(x, y) for x, y in zip(c, b))
    return InstanceFile("uniform", Sense.MAX, costs, k=k, beta=beta)
