"""Supportedness of non-dominated points via the lower-left convex hull."""
from __future__ import annotations

from enum import Enum
from typing import Iterable, Sequence

from ..core import Sense


class Support(Enum):
    EXTREME = "extreme-supported"
    SUPPORTED = "supported"
    UNSUPPORTED = "unsupported"


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def classify_supported(points: Iterable[Sequence[int]] | object,
                       sense: Sense | None = None) -> list[Support]:
    """Label each non-dominated point; labels follow the input order.

    Accepts a ParetoFront or plain ``(c, b)`` pairs.  Arithmetic is integer
    cross products only.
    """
    if hasattr(points, "outcomes"):
        sense = points.sense if sense is None else sense
        points = points.outcomes
    sense = sense or Sense.MIN
    sign = -1 if sense is Sense.MAX else 1
    pts = [(sign * p[0], sign * p[1]) for p in points]
    order = sorted(set(pts))
    hull: list[tuple[int, int]] = []
    for p in order:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    vertices = set(hull)
    labels = []
    for p in pts:
        if p in vertices:
            labels.append(Support.EXTREME)
            continue
        label = Support.UNSUPPORTED
        for a, b in zip(hull, hull[1:]):
            if a[0] <= p[0] <= b[0]:
                if _cross(a, b, p) == 0:
                    label = Support.SUPPORTED
                break
        labels.append(label)
    return labels

