"""Hand-checked data for the seven-vertex worked example and small helpers."""
from __future__ import annotations

import itertools

# Edge ids of the seven-vertex example, by end points.
E = {
    (1, 2): 0, (2, 3): 1, (1, 4): 2, (2, 4): 3, (4, 5): 4, (2, 5): 5,
    (5, 6): 6, (2, 6): 7, (3, 6): 8, (3, 7): 9, (6, 7): 10,
}


def edges(*pairs) -> frozenset:
    return frozenset(E[p] for p in pairs)


# The five trees of the worked example, as drawn.
T1 = edges((1, 2), (2, 3), (2, 4), (5, 6), (3, 7), (6, 7))
T2 = edges((1, 2), (2, 3), (2, 4), (5, 6), (3, 6), (3, 7))
T3 = edges((1, 2), (2, 4), (5, 6), (2, 6), (3, 6), (3, 7))
T4 = edges((1, 2), (2, 4), (4, 5), (2, 6), (3, 6), (3, 7))
T5 = edges((1, 2), (4, 5), (2, 5), (2, 6), (3, 6), (3, 7))
EXAMPLE_FRONT = [(17, 4), (22, 3), (27, 2), (34, 1)]


def powerset(items):
    items = list(items)
    return itertools.chain.from_iterable(itertools.combinations(items, r) for r in range(len(items) + 1))
