"""Greedy bases: minimum weight, lexicographic (c, b) and the paired (b, c) basis."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .core import BicriteriaInstance, MatroidMinor
from .errors import InvariantViolation


def min_weight_basis(minor: MatroidMinor, key: Callable[[int], object] | None = None) -> frozenset:
    """Scan the ground set in ``(key(e), e)`` order and keep what stays independent.

    The result is optimal for every weight function consistent with the order,
    so lexicographic keys give lexicographically optimal bases.
    """
    if key is None:
        order = sorted(minor.ground)
    else:
        order = sorted(minor.ground, key=lambda e: (key(e), e))
    limit = minor.known_rank()
    ext = minor.extender()
    chosen = []
    for e in order:
        if ext.can_add(e):
            ext.add(e)
            chosen.append(e)
            if len(chosen) == limit:
                break
    minor._note_rank(len(chosen))
    return frozenset(chosen)


def lex_basis_cb(instance: BicriteriaInstance) -> frozenset:
    """B_j: minimum ``c``, ties broken towards fewer red elements.

    Equivalent to the scalar weight ``(m + 1) * c + b``; the tuple key avoids
    the overflow question altogether.
    """
    inst = instance.minimized()
    costs = inst.costs
    return min_weight_basis(inst.full, key=lambda e: (costs[e].c, costs[e].b))


@dataclass(frozen=True)
class BasisPair:
    b_j: frozenset
    b_u: frozenset

    @property
    def common(self) -> frozenset:
        return self.b_j & self.b_u

    @property
    def out_set(self) -> frozenset:
        """J: red elements of b_j that have to leave."""
        return self.b_j - self.b_u

    @property
    def in_set(self) -> frozenset:
        """U: green elements of b_u that have to enter."""
        return self.b_u - self.b_j


def _find_exchange(minor, keep, other, x, pred):
    """Some f in ``other - keep`` with ``keep - x + f`` and ``other - f + x`` bases."""
    for f in sorted(other - keep):
        if not pred(f):
            continue
        if minor.is_independent((keep - {x}) | {f}) and minor.is_independent((other - {f}) | {x}):
            return f
    return None


def lex_basis_bc_repaired(instance: BicriteriaInstance, b_j: frozenset) -> frozenset:
    """B_u: most green elements, then minimum ``c``, sharing as much as possible with ``b_j``.

    The greedy key prefers members of ``b_j`` among equal (b, c) so it already
    maximizes the intersection; the exchange loop below only runs if that ever
    fails, and each step grows ``|B_u & b_j|`` by one.
    """
    inst = instance.minimized()
    costs = inst.costs
    full = inst.full
    b_u = min_weight_basis(full, key=lambda e: (costs[e].b, costs[e].c, e not in b_j))

    def cost(e):
        return costs[e].c

    def color(e):
        return costs[e].b

    while True:
        stray_green = sorted(e for e in b_j - b_u if color(e) == 0)
        if stray_green:
            g = stray_green[0]
            f = _find_exchange(full, b_j, b_u, g, lambda f: color(f) == 0 and cost(f) == cost(g))
            if f is None:
                raise InvariantViolation(f"no exchange partner for green element {g}")
            b_u = (b_u - {f}) | {g}
            continue
        stray_red = sorted(e for e in b_u - b_j if color(e) == 1)
        if stray_red:
            r = stray_red[0]
            f = _find_exchange(full, b_u, b_j, r, lambda f: color(f) == 1 and cost(f) == cost(r))
            if f is None:
                raise InvariantViolation(f"no exchange partner for red element {r}")
            b_u = (b_u - {r}) | {f}
            continue
        break
    check_basis_pair(inst, BasisPair(b_j, b_u))
    return b_u


def basis_pair(instance: BicriteriaInstance) -> BasisPair:
    b_j = lex_basis_cb(instance)
    return BasisPair(b_j, lex_basis_bc_repaired(instance, b_j))


def check_basis_pair(instance: BicriteriaInstance, pair: BasisPair) -> None:
    costs = instance.minimized().costs
    if any(costs[e].b == 0 for e in pair.b_j - pair.b_u):
        raise InvariantViolation("B_u misses a green element of B_j")
    if any(costs[e].b == 1 for e in pair.b_u - pair.b_j):
        raise InvariantViolation("B_u holds a red element outside B_j")
    if len(pair.b_j - pair.b_u) != len(pair.b_u - pair.b_j):
        raise InvariantViolation("B_j and B_u differ in size")
