"""Efficient swap algorithm and its recursive swap sequence generator."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple, Sequence

from .core import BicriteriaInstance, MatroidMinor, OutcomeVector, Sense
from .errors import InputError, InvariantViolation, PreconditionError
from .greedy import basis_pair, min_weight_basis

log = logging.getLogger(__name__)


class Swap(NamedTuple):
    """Red element ``out`` leaves, green element ``in_`` enters."""

    out: int
    in_: int
    cost: int


@dataclass(frozen=True)
class SwapSequence:
    swaps: tuple[Swap, ...]

    def __len__(self):
        return len(self.swaps)

    def __iter__(self):
        return iter(self.swaps)

    @property
    def costs(self) -> list[int]:
        return [s.cost for s in self.swaps]


class FrontPoint(NamedTuple):
    outcome: OutcomeVector
    basis: frozenset


@dataclass(frozen=True)
class ParetoFront:
    """Non-dominated outcomes, one representative basis each, in swap order.

    In minimization orientation ``c`` strictly increases and ``b`` strictly
    decreases along ``points``; for maximization instances both are reversed.
    """

    points: tuple[FrontPoint, ...]
    sense: Sense = Sense.MIN
    swaps: SwapSequence = field(default_factory=lambda: SwapSequence(()))
    nonpositive_swaps: int = 0

    def __len__(self):
        return len(self.points)

    @property
    def outcomes(self) -> list[OutcomeVector]:
        return [p.outcome for p in self.points]

    @property
    def bases(self) -> list[frozenset]:
        return [p.basis for p in self.points]


def green_ranking(instance: BicriteriaInstance) -> dict[int, int]:
    """Index of every green element after sorting by (c, id)."""
    inst = instance.minimized()
    costs = inst.costs
    greens = sorted(inst.green, key=lambda e: (costs[e].c, e))
    return {e: i for i, e in enumerate(greens)}


def ssg(minor: MatroidMinor, J: frozenset, U: frozenset, c: Sequence[int],
        green_rank: Mapping[int, int]) -> list[Swap]:
    """Match every green element of ``U`` with a red element of ``J``.

    ``minor`` must have ground set ``J | U``.  The problem is bisected on the
    cheaper half ``U1`` of ``U``: the red partners ``J1`` completing ``U1`` to a
    minimum basis stay with ``U2`` and the rest pair up with ``U1``.
    """
    J, U = frozenset(J), frozenset(U)
    if len(J) != len(U) or not U:
        raise InvariantViolation(f"SSG called with |J|={len(J)}, |U|={len(U)}")
    if minor.ground != J | U:
        raise InvariantViolation("SSG minor ground set must equal J | U")
    if len(U) == 1:
        (j,), (u,) = J, U
        return [Swap(j, u, c[u] - c[j])]

    ordered = sorted(U, key=green_rank.__getitem__)
    U1 = frozenset(ordered[: len(U) // 2])
    U2 = U - U1
    try:
        restricted = minor.delete(U2).contract(U1)
    except PreconditionError as exc:
        raise InvariantViolation(f"U1 dependent in SSG minor: {exc}") from exc
    J1 = min_weight_basis(restricted, key=c.__getitem__)
    if len(J1) != len(U2):
        raise InvariantViolation(f"|J1|={len(J1)} but |U2|={len(U2)}")
    J2 = J - J1
    first = ssg(minor.delete(U2).contract(J1), J2, U1, c, green_rank)
    second = ssg(minor.delete(J2).contract(U1), J1, U2, c, green_rank)
    return first + second


def sort_swaps(swaps: Sequence[Swap], green_rank: Mapping[int, int]) -> SwapSequence:
    """Order by cost, equal costs by the rank of the entering green element."""
    return SwapSequence(tuple(sorted(swaps, key=lambda s: (s.cost, green_rank[s.in_]))))


def run_esa(instance: BicriteriaInstance) -> ParetoFront:
    """Non-dominated set and a minimal complete efficient set of a binary instance."""
    if not instance.is_binary:
        raise InputError("the swap algorithm needs binary b costs")
    inst = instance.minimized()
    costs = inst.costs
    c = inst.c
    full = inst.full
    m = full.rank()

    pair = basis_pair(inst)
    b_j, b_u = pair.b_j, pair.b_u
    rank_of = green_ranking(inst)

    if b_j == b_u:
        swaps = SwapSequence(())
    else:
        reduced = full.restrict(b_j | b_u).contract(pair.common)
        swaps = sort_swaps(ssg(reduced, pair.out_set, pair.in_set, c, rank_of), rank_of)

    basis = b_j
    y = inst.outcome(basis)
    points = [FrontPoint(y, basis)]
    skipped = 0
    prev_cost = None
    for s in swaps:
        if costs[s.out].b != 1 or costs[s.in_].b != 0:
            raise InvariantViolation(f"swap {s} does not trade red for green")
        if prev_cost is not None and s.cost < prev_cost:
            raise InvariantViolation("swap costs decrease along the sequence")
        prev_cost = s.cost
        basis = (basis - {s.out}) | {s.in_}
        y = OutcomeVector(y.c + s.cost, y.b - 1)
        if not full.is_independent(basis) or len(basis) != m:
            raise InvariantViolation(f"applying {s} left the set of bases")
        if s.cost <= 0:
            # cannot happen from a lexicographic start; keep the b-minimal one
            skipped += 1
            points[-1] = FrontPoint(y, basis)
            continue
        points.append(FrontPoint(y, basis))
    if skipped:
        log.warning("%d swaps with non-positive cost after the lexicographic basis", skipped)

    for a, b in zip(points, points[1:]):
        if not (a.outcome.c < b.outcome.c and a.outcome.b - 1 == b.outcome.b):
            raise InvariantViolation("front is not strictly monotone")
    if len(points) > m + 1:
        raise InvariantViolation("front larger than rank + 1")

    if instance.sense is Sense.MAX:
        points = [FrontPoint(instance.to_original(p.outcome), p.basis) for p in points]
    return ParetoFront(tuple(points), instance.sense, swaps, skipped)


def slopes(front: ParetoFront) -> list[tuple[int, int]]:
    """Slopes between consecutive points as exact (db, dc) pairs, minimization orientation."""
    pts = front.outcomes
    if front.sense is Sense.MAX:
        pts = [OutcomeVector(-p.c, -p.b) for p in pts]
    return [(q.b - p.b, q.c - p.c) for p, q in zip(pts, pts[1:])]
