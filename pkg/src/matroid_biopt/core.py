"""Matroid data model: independence oracles, minors and bicriteria instances.

Every algorithm in the package talks to a matroid only through
:meth:`Matroid.is_independent` and :meth:`Matroid.extender`.  Minors are
cheap immutable views on top of a base matroid; nothing is copied.
"""
from __future__ import annotations

import threading
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import InfeasibleInstanceError, InputError, PreconditionError

Basis = frozenset  # frozenset[int]; use canonical() for the sorted form


def canonical(elements: Iterable[int]) -> tuple[int, ...]:
    """Sorted tuple form of a set of element ids (the canonical basis layout)."""
    return tuple(sorted(elements))


class Extender:
    """Incremental independence test for a growing independent set.

    ``can_add(e)`` answers whether ``current + e`` is independent and ``add(e)``
    commits the element.  This fallback asks the full oracle every time;
    concrete matroids override it with something incremental.
    """

    def __init__(self, matroid: Matroid):
        self._matroid = matroid
        self._current: set[int] = set()

    def can_add(self, e: int) -> bool:
        if e in self._current:
            return False
        self._current.add(e)
        ok = self._matroid.is_independent(self._current)
        self._current.discard(e)
        return ok

    def add(self, e: int) -> None:
        self._current.add(e)


class Matroid(ABC):
    """Independence oracle over the ground set ``{0, ..., n_elements - 1}``."""

    @property
    @abstractmethod
    def n_elements(self) -> int:
        ...

    @abstractmethod
    def _independent(self, subset: Sequence[int]) -> bool:
        """Oracle body; ids are already range-checked and duplicate free."""

    def is_independent(self, subset: Iterable[int]) -> bool:
        items = self._checked(subset)
        return self._independent(items)

    def extender(self) -> Extender:
        return Extender(self)

    def check_solvable(self) -> None:
        """Raise InfeasibleInstanceError if bicriteria solving is not allowed."""

    def minor(self) -> MatroidMinor:
        """The trivial view: nothing deleted, nothing contracted."""
        return MatroidMinor(self)

    def _checked(self, subset: Iterable[int]) -> list[int]:
        items = list(set(subset))
        n = self.n_elements
        for e in items:
            if not (0 <= e < n):
                raise InputError(f"element id {e} out of range 0..{n - 1}")
        return items


class MatroidMinor:
    """View ``(base - deleted) / contracted`` of a matroid.

    Stored as the remaining ground set plus the contracted set; the deleted set
    is their complement.  Views never mutate, ``delete``/``contract`` return new
    ones.  The rank is computed on first use and cached (guarded by a lock so
    concurrent readers compute it once).
    """

    __slots__ = ("base", "ground", "contracted", "_rank", "_lock")

    def __init__(self, base: Matroid, ground: Iterable[int] | None = None,
                 contracted: Iterable[int] = ()):
        self.base = base
        self.ground = frozenset(range(base.n_elements)) if ground is None else frozenset(ground)
        self.contracted = frozenset(contracted)
        self._rank: int | None = None
        self._lock = threading.Lock()

    def __repr__(self):
        return (f"MatroidMinor(|ground|={len(self.ground)}, "
                f"|contracted|={len(self.contracted)}, |deleted|={len(self.deleted)})")

    @property
    def deleted(self) -> frozenset:
        return frozenset(range(self.base.n_elements)) - self.ground - self.contracted

    def is_independent(self, subset: Iterable[int]) -> bool:
        items = set(self.base._checked(subset))
        ground = self.ground
        for e in items:
            if e not in ground:
                return False
        return self.base._independent(list(items | self.contracted))

    def is_basis(self, subset: Iterable[int]) -> bool:
        items = set(subset)
        return items <= self.ground and len(items) == self.rank() and self.is_independent(items)

    def extender(self) -> Extender:
        """Extender pre-loaded with the contracted set.

        Callers must only offer elements of ``self.ground``.
        """
        ext = self.base.extender()
        for e in self.contracted:
            ext.add(e)
        return ext

    def delete(self, subset: Iterable[int]) -> MatroidMinor:
        s = frozenset(subset)
        self.base._checked(s)
        if s & self.contracted:
            raise PreconditionError("cannot delete contracted elements")
        return MatroidMinor(self.base, self.ground - s, self.contracted)

    def restrict(self, keep: Iterable[int]) -> MatroidMinor:
        """Delete everything outside ``keep``."""
        return self.delete(self.ground - frozenset(keep))

    def contract(self, subset: Iterable[int]) -> MatroidMinor:
        s = frozenset(subset)
        if not s <= self.ground:
            raise PreconditionError("contracted elements must lie in the minor's ground set")
        if not self.is_independent(s):
            raise PreconditionError("cannot contract a dependent set")
        return MatroidMinor(self.base, self.ground - s, self.contracted | s)

    def rank(self) -> int:
        if self._rank is None:
            with self._lock:
                if self._rank is None:
                    ext = self.extender()
                    r = 0
                    for e in sorted(self.ground):
                        if ext.can_add(e):
                            ext.add(e)
                            r += 1
                    self._rank = r
        return self._rank

    def _note_rank(self, r: int) -> None:
        # greedy runs discover the rank for free
        with self._lock:
            if self._rank is None:
                self._rank = r

    def known_rank(self) -> int | None:
        return self._rank


def is_independent(minor: MatroidMinor, subset: Iterable[int]) -> bool:
    return minor.is_independent(subset)


def rank(minor: MatroidMinor) -> int:
    return minor.rank()


def delete(minor: MatroidMinor, subset: Iterable[int]) -> MatroidMinor:
    return minor.delete(subset)


def contract(minor: MatroidMinor, subset: Iterable[int]) -> MatroidMinor:
    return minor.contract(subset)


def fundamental_circuit(minor: MatroidMinor, basis: Iterable[int], e: int) -> frozenset:
    """The unique circuit inside ``basis + e``.

    An element ``x`` of the basis lies on the circuit exactly when
    ``basis - x + e`` is again independent.
    """
    b = frozenset(basis)
    if e in b:
        raise PreconditionError(f"element {e} already lies in the basis")
    if e not in minor.ground:
        raise PreconditionError(f"element {e} is not in the minor's ground set")
    if not minor.is_basis(b):
        raise PreconditionError("given set is not a basis of the minor")
    return frozenset([e] + [x for x in b if minor.is_independent((b - {x}) | {e})])


class Sense(Enum):
    MIN = "min"
    MAX = "max"


@dataclass(frozen=True)
class CostPair:
    c: int
    b: int


class OutcomeVector(NamedTuple):
    c: int
    b: int


@dataclass(frozen=True, eq=False)
class BicriteriaInstance:
    """A matroid with a general cost ``c`` and a small-integer cost ``b``.

    ``beta`` is the largest admissible ``b`` value; it is 1 for the binary
    problems the swap algorithm solves and larger only for the uniform-matroid
    dynamic program.  Maximization instances are solved through
    :meth:`minimized`, which maps ``c -> c_max - c`` and ``b -> beta - b``.
    Because every basis has the same size ``m`` this is an affine map on
    outcome vectors, undone by :meth:`to_original`.
    """

    matroid: Matroid
    costs: tuple[CostPair, ...]
    sense: Sense = Sense.MIN
    beta: int = 1

    def __post_init__(self):
        object.__setattr__(self, "costs", tuple(self.costs))
        n = self.matroid.n_elements
        if n == 0:
            raise InfeasibleInstanceError("empty ground set")
        if len(self.costs) != n:
            raise InputError(f"{len(self.costs)} cost pairs for {n} elements")
        if self.beta < 1:
            raise InputError("beta must be at least 1")
        for i, cp in enumerate(self.costs):
            if not isinstance(cp.c, int) or cp.c < 0:
                raise InputError(f"element {i}: c must be a non-negative integer")
            if not isinstance(cp.b, int) or not 0 <= cp.b <= self.beta:
                raise InputError(f"element {i}: b must lie in 0..{self.beta}")
        self.matroid.check_solvable()
        full = self.matroid.minor()
        if full.rank() == 0:
            raise InfeasibleInstanceError("matroid has rank 0")
        object.__setattr__(self, "full", full)

    @property
    def rank(self) -> int:
        return self.full.rank()

    @property
    def c(self) -> tuple[int, ...]:
        return tuple(cp.c for cp in self.costs)

    @property
    def b(self) -> tuple[int, ...]:
        return tuple(cp.b for cp in self.costs)

    @property
    def is_binary(self) -> bool:
        return all(cp.b in (0, 1) for cp in self.costs)

    @property
    def green(self) -> frozenset:
        return frozenset(i for i, cp in enumerate(self.costs) if cp.b == 0)

    @property
    def red(self) -> frozenset:
        return frozenset(i for i, cp in enumerate(self.costs) if cp.b != 0)

    def outcome(self, basis: Iterable[int]) -> OutcomeVector:
        c = b = 0
        costs = self.costs
        for e in basis:
            c += costs[e].c
            b += costs[e].b
        return OutcomeVector(c, b)

    def minimized(self) -> BicriteriaInstance:
        if self.sense is Sense.MIN:
            return self
        cmax = self._cmax
        flipped = tuple(CostPair(cmax - cp.c, self.beta - cp.b) for cp in self.costs)
        inst = BicriteriaInstance.__new__(BicriteriaInstance)
        for name, value in (("matroid", self.matroid), ("costs", flipped),
                            ("sense", Sense.MIN), ("beta", self.beta), ("full", self.full)):
            object.__setattr__(inst, name, value)
        return inst

    def to_original(self, y: OutcomeVector) -> OutcomeVector:
        """Map an outcome of :meth:`minimized` back to this instance's orientation."""
        if self.sense is Sense.MIN:
            return OutcomeVector(*y)
        m = self.rank
        return OutcomeVector(m * self._cmax - y.c, m * self.beta - y.b)

    @cached_property
    def _cmax(self) -> int:
        return max(cp.c for cp in self.costs)
