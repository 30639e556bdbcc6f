"""Dominance filtering of outcome vectors."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable

from ..core import OutcomeVector, Sense


@dataclass
class EfficientSet:
    """Parallel lists of bases and their outcome vectors."""

    bases: list
    outcomes: list[OutcomeVector]

    def __len__(self):
        return len(self.bases)

    @property
    def nondominated(self) -> list[OutcomeVector]:
        return sorted(set(self.outcomes))


def pareto_filter(entries: Iterable[tuple[OutcomeVector, Any]], sense: Sense = Sense.MIN,
                  weak: bool = False) -> EfficientSet:
    """Keep the entries whose outcome no other entry dominates.

    With ``weak=True`` only strict domination (better in both coordinates)
    removes an entry, which yields the weakly efficient set.  Entries sharing an
    outcome are all kept.
    """
    entries = list(entries)
    sign = -1 if sense is Sense.MAX else 1
    distinct = sorted({(sign * y[0], sign * y[1]) for y, _ in entries})
    keep = set()
    best_before = None  # min b over strictly smaller c
    i = 0
    while i < len(distinct):
        c = distinct[i][0]
        group = []
        while i < len(distinct) and distinct[i][0] == c:
            group.append(distinct[i])
            i += 1
        lowest = group[0][1]
        if weak:
            keep.update(p for p in group if best_before is None or p[1] <= best_before)
        elif best_before is None or lowest < best_before:
            keep.add(group[0])
        if best_before is None or lowest < best_before:
            best_before = lowest
    picked = [(y, payload) for y, payload in entries
              if (sign * y[0], sign * y[1]) in keep]
    return EfficientSet([p for _, p in picked], [OutcomeVector(*y) for y, _ in picked])
