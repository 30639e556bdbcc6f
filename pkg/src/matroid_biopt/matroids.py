"""Concrete matroid oracles: graphic, uniform and partition matroids."""
from __future__ import annotations

from typing import Iterable, Sequence

from .core import Extender, Matroid
from .errors import InfeasibleInstanceError, InputError


class UnionFind:
    """Disjoint sets over arbitrary hashable items, path compression + union by rank."""

    __slots__ = ("parent", "rank")

    def __init__(self):
        self.parent: dict = {}
        self.rank: dict = {}

    def find(self, x):
        parent = self.parent
        root = parent.get(x, x)
        if root == x:
            return x
        while True:
            up = parent.get(root, root)
            if up == root:
                break
            root = up
        while x != root:
            nxt = parent[x]
            parent[x] = root
            x = nxt
        return root

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        kx, ky = self.rank.get(rx, 0), self.rank.get(ry, 0)
        if kx < ky:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if kx == ky:
            self.rank[rx] = kx + 1
        return True


class _ForestExtender(Extender):
    def __init__(self, edges):
        self._edges = edges
        self._uf = UnionFind()

    def can_add(self, e: int) -> bool:
        u, v = self._edges[e]
        return self._uf.find(u) != self._uf.find(v)

    def add(self, e: int) -> None:
        u, v = self._edges[e]
        self._uf.union(u, v)


class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph on vertices ``1..n_vertices``.

    Parallel edges are allowed; a self-loop is a dependent singleton.
    """

    def __init__(self, n_vertices: int, edges: Iterable[tuple[int, int]]):
        self.n_vertices = int(n_vertices)
        self.edges: tuple[tuple[int, int], ...] = tuple((int(u), int(v)) for u, v in edges)
        for i, (u, v) in enumerate(self.edges):
            if not (1 <= u <= self.n_vertices and 1 <= v <= self.n_vertices):
                raise InputError(f"edge {i} = [{u},{v}] has a vertex outside 1..{self.n_vertices}")

    def __repr__(self):
        return f"GraphicMatroid(n_vertices={self.n_vertices}, n_edges={len(self.edges)})"

    @property
    def n_elements(self) -> int:
        return len(self.edges)

    def _independent(self, subset: Sequence[int]) -> bool:
        uf = UnionFind()
        edges = self.edges
        for e in subset:
            u, v = edges[e]
            if not uf.union(u, v):
                return False
        return True

    def extender(self) -> Extender:
        return _ForestExtender(self.edges)

    def n_components(self) -> int:
        uf = UnionFind()
        merged = 0
        for u, v in self.edges:
            if uf.union(u, v):
                merged += 1
        return self.n_vertices - merged

    def is_connected(self) -> bool:
        return self.n_components() == 1

    def check_solvable(self) -> None:
        if not self.is_connected():
            raise InfeasibleInstanceError("graph is disconnected, it has no spanning tree")


class _CountingExtender(Extender):
    def __init__(self, block_of, bounds):
        self._block_of = block_of
        self._room = list(bounds)

    def can_add(self, e: int) -> bool:
        return self._room[self._block_of[e]] > 0

    def add(self, e: int) -> None:
        self._room[self._block_of[e]] -= 1


class PartitionMatroid(Matroid):
    """``I`` is independent iff ``|I & blocks[i]| <= bounds[i]`` for every block."""

    def __init__(self, blocks: Iterable[Iterable[int]], bounds: Iterable[int]):
        self.blocks = tuple(tuple(sorted(blk)) for blk in blocks)
        self.bounds = tuple(int(x) for x in bounds)
        if len(self.blocks) != len(self.bounds):
            raise InputError("one bound per block required")
        if any(x < 0 for x in self.bounds):
            raise InputError("block bounds must be non-negative")
        n = sum(len(blk) for blk in self.blocks)
        block_of = [-1] * n
        for i, blk in enumerate(self.blocks):
            for e in blk:
                if not 0 <= e < n or block_of[e] != -1:
                    raise InputError("blocks must partition 0..n-1")
                block_of[e] = i
        self._block_of = tuple(block_of)

    def __repr__(self):
        return f"PartitionMatroid(blocks={len(self.blocks)}, n={self.n_elements})"

    @property
    def n_elements(self) -> int:
        return len(self._block_of)

    def _independent(self, subset: Sequence[int]) -> bool:
        room = list(self.bounds)
        for e in subset:
            i = self._block_of[e]
            room[i] -= 1
            if room[i] < 0:
                return False
        return True

    def extender(self) -> Extender:
        return _CountingExtender(self._block_of, self.bounds)


class UniformMatroid(Matroid):
    """``U_{k,n}``: every set of at most ``k`` elements is independent."""

    def __init__(self, n: int, k: int):
        if not 0 < k <= n:
            raise InputError(f"uniform matroid needs 0 < k <= n, got k={k}, n={n}")
        self.n = int(n)
        self.k = int(k)

    def __repr__(self):
        return f"UniformMatroid(k={self.k}, n={self.n})"

    @property
    def n_elements(self) -> int:
        return self.n

    def _independent(self, subset: Sequence[int]) -> bool:
        return len(subset) <= self.k

    def extender(self) -> Extender:
        return _CountingExtender((0,) * self.n, (self.k,))


def graphic_independent(matroid: GraphicMatroid, edges: Iterable[int]) -> bool:
    return matroid.is_independent(edges)


def uniform_independent(matroid: UniformMatroid, subset: Iterable[int]) -> bool:
    return matroid.is_independent(subset)


def partition_independent(matroid: PartitionMatroid, subset: Iterable[int]) -> bool:
    return matroid.is_independent(subset)
