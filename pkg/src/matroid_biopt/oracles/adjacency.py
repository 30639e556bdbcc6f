"""Adjacency graph of efficient bases and its connectivity."""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Sequence

from ..errors import PreconditionError


@dataclass(frozen=True)
class AdjacencyGraph:
    nodes: tuple[frozenset, ...]
    edges: tuple[tuple[int, int], ...]

    def components(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.nodes]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        seen = [False] * len(self.nodes)
        comps = []
        for start in range(len(self.nodes)):
            if seen[start]:
                continue
            seen[start] = True
            comp = [start]
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for w in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(comp)
        return comps


def adjacency_graph(bases: Sequence, m: int) -> AdjacencyGraph:
    """Bases are adjacent when they share exactly ``m - 1`` elements.

    Two distinct bases of size ``m`` share at most one ``(m-1)``-subset, so
    bucketing every basis under each of its ``(m-1)``-subsets lists every edge
    exactly once without comparing all pairs.
    """
    nodes = tuple(dict.fromkeys(frozenset(b) for b in bases))
    buckets: dict[frozenset, list[int]] = defaultdict(list)
    for i, basis in enumerate(nodes):
        for e in basis:
            buckets[basis - {e}].append(i)
    edges = sorted((i, j) for group in buckets.values()
                   for a, i in enumerate(group) for j in group[a + 1:])
    return AdjacencyGraph(nodes, tuple(edges))


def adjacency_connected(eff, m: int) -> tuple[bool, int]:
    """Whether the complete efficient set is connected, and its component count.

    ``eff`` is an EfficientSet or a plain sequence of bases.
    """
    bases = eff.bases if hasattr(eff, "bases") else list(eff)
    if not bases:
        raise PreconditionError("efficient set is empty")
    n_comp = len(adjacency_graph(bases, m).components())
    return n_comp == 1, n_comp
