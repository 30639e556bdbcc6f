"""Reference solver: apply one minimal swap at a time, scanning every candidate."""
from __future__ import annotations

from typing import NamedTuple

from ..core import BicriteriaInstance, OutcomeVector, fundamental_circuit
from ..errors import InputError
from ..greedy import min_weight_basis


class SwapStep(NamedTuple):
    basis: frozenset
    outcome: OutcomeVector
    swap: tuple[int, int, int] | None  # (out, in, cost) that produced this basis


def all_swaps(instance: BicriteriaInstance, basis: frozenset) -> list[tuple[int, int, int]]:
    """Every (red out, green in, cost) with ``basis - out + in`` a basis (minimization costs)."""
    inst = instance.minimized()
    costs = inst.costs
    out = []
    for f in sorted(inst.green - basis):
        circuit = fundamental_circuit(inst.full, basis, f)
        for e in sorted(circuit - {f}):
            if costs[e].b == 1:
                out.append((e, f, costs[f].c - costs[e].c))
    return out


def naive_minimal_swap_solver(instance: BicriteriaInstance) -> list[SwapStep]:
    """Bases B_l, ..., B_u, each a cheapest basis with its number of green elements.

    Starts from the cheapest basis among those with the fewest green elements and
    repeatedly applies a cheapest swap (ties: lowest-ranked green element, then
    lowest red id) until no swap is left.  Outcomes are in the instance's own
    orientation.
    """
    if not instance.is_binary:
        raise InputError("the swap solver needs binary b costs")
    inst = instance.minimized()
    costs = inst.costs
    basis = min_weight_basis(inst.full, key=lambda e: (-costs[e].b, costs[e].c))
    green_key = {e: (costs[e].c, e) for e in inst.green}
    y = inst.outcome(basis)
    steps = [SwapStep(basis, instance.to_original(y), None)]
    while True:
        swaps = all_swaps(inst, basis)
        if not swaps:
            break
        e, f, cost = min(swaps, key=lambda s: (s[2], green_key[s[1]], s[0]))
        basis = (basis - {e}) | {f}
        y = OutcomeVector(y.c + cost, y.b - 1)
        steps.append(SwapStep(basis, instance.to_original(y), (e, f, cost)))
    return steps


def efficient_suffix(steps: list[SwapStep]) -> list[SwapStep]:
    """Drop the leading bases that a later zero- or negative-cost swap dominates."""
    start = 0
    for i in range(1, len(steps)):
        if steps[i].swap[2] <= 0:
            start = i
        else:
            break
    return steps[start:]
