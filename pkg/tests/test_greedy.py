from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matroid_biopt import (
    BasisPair,
    BicriteriaInstance,
    CostPair,
    InvariantViolation,
    PartitionMatroid,
    UniformMatroid,
    lex_basis_bc_repaired,
    lex_basis_cb,
    min_weight_basis,
)
from matroid_biopt.greedy import basis_pair, check_basis_pair
from matroid_biopt.oracles import enumerate_bases
from strategies import instances, matroids
from worked_example import T2, T5, edges


def all_bases(inst):
    return [frozenset(b) for b in enumerate_bases(inst.matroid)]


@settings(max_examples=80, deadline=None)
@given(matroids(), st.data())
def test_greedy_is_weight_optimal(m, data):
    w = data.draw(st.lists(st.integers(-5, 5), min_size=m.n_elements, max_size=m.n_elements))
    minor = m.minor()
    basis = min_weight_basis(minor, key=w.__getitem__)
    assert minor.is_basis(basis)
    assert all(not minor.is_independent(basis | {e}) for e in minor.ground - basis)
    best = min(sum(w[e] for e in b) for b in enumerate_bases(m))
    assert sum(w[e] for e in basis) == best


def test_greedy_examples(seven, knapsack):
    costs = seven.costs
    basis = min_weight_basis(seven.full, key=lambda e: costs[e].c)
    assert seven.outcome(basis).c == 17
    flipped = knapsack.minimized().costs
    assert min_weight_basis(knapsack.full, key=lambda e: flipped[e].c) == {0, 1, 2}
    empty = UniformMatroid(3, 3).minor().contract({0, 1, 2})
    assert min_weight_basis(empty) == frozenset()
    assert min_weight_basis(PartitionMatroid([[0, 1]], [0]).minor()) == frozenset()


def test_lex_basis_cb_example(seven):
    assert lex_basis_cb(seven) == T2
    assert seven.outcome(T2) == (17, 4)


@settings(max_examples=80, deadline=None)
@given(instances())
def test_lex_basis_cb_is_lexicographically_optimal(inst):
    bj = lex_basis_cb(inst)
    outcomes = {inst.outcome(b) for b in all_bases(inst)}
    assert inst.outcome(bj) == min(outcomes)


def test_lex_basis_cb_special_cases():
    u = UniformMatroid(6, 3)
    green = BicriteriaInstance(u, [CostPair(c, 0) for c in (5, 1, 4, 1, 3, 9)])
    assert lex_basis_cb(green) == min_weight_basis(u.minor(), key=lambda e: green.costs[e].c)
    flat = BicriteriaInstance(u, [CostPair(7, b) for b in (1, 0, 1, 1, 0, 1)])
    assert flat.outcome(lex_basis_cb(flat)).b == min(flat.outcome(b).b for b in all_bases(flat))


def test_basis_pair_example(seven):
    pair = basis_pair(seven)
    assert pair.b_j == T2 and pair.b_u == T5
    assert seven.outcome(T5) == (34, 1)
    assert pair.in_set == edges((2, 6), (4, 5), (2, 5))
    assert pair.out_set == edges((2, 3), (5, 6), (2, 4))
    assert pair.common == edges((1, 2), (3, 6), (3, 7))


def test_all_green_pair_coincides():
    inst = BicriteriaInstance(UniformMatroid(5, 2), [CostPair(c, 0) for c in (3, 1, 2, 2, 0)])
    pair = basis_pair(inst)
    assert pair.b_j == pair.b_u and not pair.in_set and not pair.out_set


@settings(max_examples=150, deadline=None)
@given(instances())
def test_basis_pair_properties(inst):
    pair = basis_pair(inst)
    costs = inst.costs
    green = lambda e: costs[e].b == 0  # noqa: E731
    assert all(e in pair.b_u for e in pair.b_j if green(e))  # property (a)
    assert all(e in pair.b_j for e in pair.b_u if not green(e))  # property (b)
    assert len(pair.in_set) == len(pair.out_set)
    bases = all_bases(inst)
    # B_u is lexicographically optimal for (b, c): most green elements, then cheapest
    assert min((inst.outcome(b).b, inst.outcome(b).c) for b in bases) == \
        (inst.outcome(pair.b_u).b, inst.outcome(pair.b_u).c)
    n_green = lambda b: sum(green(e) for e in b)  # noqa: E731
    assert n_green(pair.b_j) <= n_green(pair.b_u) == max(n_green(b) for b in bases)


@settings(max_examples=100, deadline=None)
@given(instances(matroid=st.integers(1, 12).flatmap(
    lambda n: st.builds(UniformMatroid, st.just(n), st.integers(1, n)))))
def test_b_u_shares_as_much_as_possible_with_b_j(inst):
    bj = lex_basis_cb(inst)
    bu = lex_basis_bc_repaired(inst, bj)
    key = lambda b: (inst.outcome(b).b, inst.outcome(b).c)  # noqa: E731
    bases = all_bases(inst)
    best = min(key(b) for b in bases)
    assert len(bu & bj) == max(len(b & bj) for b in bases if key(b) == best)


def test_check_basis_pair_rejects_bad_pairs(seven):
    with pytest.raises(InvariantViolation):
        check_basis_pair(seven, BasisPair(T2, T2 - {min(T2)} | {10}))
    with pytest.raises(InvariantViolation):
        check_basis_pair(seven, BasisPair(T5, T2))
