"""Plain-text instance files.

Graphic::

    graphic <n_vertices> <n_edges> <min|max>
    <u> <v> <c> <b>        # one line per edge, vertices 1-based

Uniform::

    uniform <n> <k> <beta> <min|max>
    <c> <b>                # one line per element

Blank lines and everything after ``#`` are ignored.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Sequence

from .core import BicriteriaInstance, CostPair, Sense
from .errors import ParseError
from .matroids import GraphicMatroid, UniformMatroid


@dataclass(frozen=True)
class InstanceFile:
    kind: str  # "graphic" | "uniform"
    sense: Sense
    costs: tuple[CostPair, ...]
    n_vertices: int = 0
    edges: tuple[tuple[int, int], ...] = ()
    k: int = 0
    beta: int = 1

    @property
    def n_elements(self) -> int:
        return len(self.costs)

    def to_instance(self) -> BicriteriaInstance:
        if self.kind == "graphic":
            matroid = GraphicMatroid(self.n_vertices, self.edges)
        else:
            matroid = UniformMatroid(len(self.costs), self.k)
        return BicriteriaInstance(matroid, self.costs, self.sense, self.beta)

    def dumps(self) -> str:
        if self.kind == "graphic":
            lines = [f"graphic {self.n_vertices} {len(self.edges)} {self.sense.value}"]
            lines += [f"{u} {v} {cp.c} {cp.b}" for (u, v), cp in zip(self.edges, self.costs)]
        else:
            lines = [f"uniform {len(self.costs)} {self.k} {self.beta} {self.sense.value}"]
            lines += [f"{cp.c} {cp.b}" for cp in self.costs]
        return "\n".join(lines) + "\n"

    def write(self, path) -> None:
        Path(path).write_text(self.dumps())


def _ints(tokens: Sequence[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def _sense(token: str, lineno: int) -> Sense:
    try:
        return Sense(token.lower())
    except ValueError:
        raise ParseError(f"line {lineno}: sense must be 'min' or 'max', got {token!r}") from None


def loads(text: str) -> InstanceFile:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty instance file")
    lineno, head = rows[0]
    body = rows[1:]
    kind = head[0].lower()
    if kind == "graphic":
        if len(head) != 4:
            raise ParseError(f"line {lineno}: header must be 'graphic n m sense'")
        n, m = _ints(head[1:3], lineno)
        sense = _sense(head[3], lineno)
        if len(body) != m:
            raise ParseError(f"header announces {m} edges, file has {len(body)}")
        edges, costs = [], []
        for ln, tokens in body:
            if len(tokens) != 4:
                raise ParseError(f"line {ln}: edge line must be 'u v c b'")
            u, v, c, b = _ints(tokens, ln)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"line {ln}: vertex out of range 1..{n}")
            if c < 0 or b not in (0, 1):
                raise ParseError(f"line {ln}: need c >= 0 and b in {{0,1}}")
            edges.append((u, v))
            costs.append(CostPair(c, b))
        return InstanceFile("graphic", sense, tuple(costs), n_vertices=n, edges=tuple(edges))
    if kind == "uniform":
        if len(head) != 5:
            raise ParseError(f"line {lineno}: header must be 'uniform n k beta sense'")
        n, k, beta = _ints(head[1:4], lineno)
        sense = _sense(head[4], lineno)
        if not 0 < k <= n:
            raise ParseError(f"line {lineno}: need 0 < k <= n")
        if beta < 1:
            raise ParseError(f"line {lineno}: beta must be at least 1")
        if len(body) != n:
            raise ParseError(f"header announces {n} elements, file has {len(body)}")
        costs = []
        for ln, tokens in body:
            if len(tokens) != 2:
                raise ParseError(f"line {ln}: element line must be 'c b'")
            c, b = _ints(tokens, ln)
            if c < 0 or not 0 <= b <= beta:
                raise ParseError(f"line {ln}: need c >= 0 and 0 <= b <= {beta}")
            costs.append(CostPair(c, b))
        return InstanceFile("uniform", sense, tuple(costs), k=k, beta=beta)
    raise ParseError(f"line {lineno}: unknown instance kind {head[0]!r}")


def load(path) -> InstanceFile:
    return loads(Path(path).read_text())


def bundled(name: str) -> InstanceFile:
    """One of the small instances shipped in ``matroid_biopt/data``."""
    return loads(resources.files("matroid_biopt").joinpath("data", name).read_text())


def bundled_names() -> list[str]:
    folder = resources.files("matroid_biopt").joinpath("data")
    return sorted(p.name for p in folder.iterdir() if p.name.endswith(".txt"))
