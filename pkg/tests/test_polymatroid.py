from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings

import oracles
from polynet.polymatroid import (
    DiscretePolymatroid,
    RankTable,
    check_rank_axioms,
    membership,
    modular_table,
    scale_rank,
)
from polynet.representation import rank_table_from_matrices
from strategies import rank_tables, representations

EXAMPLE2_MEMBERS = {
    (0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 0, 1), (0, 2, 0),
    (0, 0, 2), (0, 1, 2), (0, 2, 1), (1, 1, 1), (1, 2, 0), (0, 2, 2), (1, 2, 1),
}
EXAMPLE3_BASES = {
    (0, 0, 2, 2), (0, 1, 1, 2), (0, 1, 2, 1), (0, 2, 0, 2), (0, 2, 1, 1), (0, 2, 2, 0),
    (1, 0, 1, 2), (1, 0, 2, 1), (1, 1, 0, 2), (1, 1, 1, 1), (1, 1, 2, 0), (1, 2, 0, 1),
    (1, 2, 1, 0), (2, 0, 0, 2), (2, 0, 1, 1), (2, 0, 2, 0), (2, 1, 0, 1), (2, 1, 1, 0),
    (2, 2, 0, 0),
}
EXAMPLE3_D = {
    1: {(1, 0, 2, 2), (1, 1, 1, 2), (1, 1, 2, 1), (1, 1, 2, 2), (1, 2, 0, 2),
        (1, 2, 1, 1), (1, 2, 1, 2), (1, 2, 2, 0), (1, 2, 2, 1), (1, 2, 2, 2)},
    2: {(0, 1, 2, 2), (1, 1, 1, 2), (1, 1, 2, 1), (1, 1, 2, 2), (2, 1, 0, 2),
        (2, 1, 1, 1), (2, 1, 1, 2), (2, 1, 2, 0), (2, 1, 2, 1), (2, 1, 2, 2)},
    3: {(0, 2, 1, 2), (1, 1, 1, 2), (1, 2, 1, 1), (1, 2, 1, 2), (2, 0, 1, 2),
        (2, 1, 1, 1), (2, 1, 1, 2), (2, 2, 1, 0), (2, 2, 1, 1), (2, 2, 1, 2)},
    4: {(0, 2, 2, 1), (1, 1, 2, 1), (1, 2, 1, 1), (1, 2, 2, 1), (2, 0, 2, 1),
        (2, 1, 1, 1), (2, 1, 2, 1), (2, 2, 0, 1), (2, 2, 1, 1), (2, 2, 2, 1)},
}
EXAMPLE3_C = {
    1: {(1, 0, 2, 2), (1, 2, 0, 2), (1, 2, 2, 0)},
    2: {(0, 1, 2, 2), (2, 1, 0, 2), (2, 1, 2, 0)},
    3: {(2, 2, 1, 0), (0, 2, 1, 2), (2, 0, 1, 2)},
    4: {(2, 2, 0, 1), (0, 2, 2, 1), (2, 0, 2, 1)},
}
EXAMPLE3_R = {(0, 0, 2, 2), (0, 2, 0, 2), (0, 2, 2, 0), (2, 0, 0, 2), (2, 0, 2, 0), (2, 2, 0, 0)}


# -- values quoted from the worked examples ------------------------------------

def test_example1_axioms_and_bases(fx):
    t = fx("example1")
    assert check_rank_axioms(t)
    d = DiscretePolymatroid(t)
    assert set(d.bases) == {(0, 5), (1, 4), (2, 3), (3, 2)}
    assert d.rank_value == 5


def test_example2_members_and_bases(fx):
    t = fx("example2")
    assert check_rank_axioms(t)
    d = DiscretePolymatroid(t)
    assert len(d.members) == 15
    assert set(d.members) == EXAMPLE2_MEMBERS
    assert set(d.bases) == {(0, 2, 2), (1, 2, 1)}


def test_example3_bases(fx):
    d = DiscretePolymatroid(fx("example3"))
    assert set(d.bases) == EXAMPLE3_BASES
    assert d.rho_max == 2


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_example3_excluded_and_circuit_like_sets(fx, i):
    d = DiscretePolymatroid(fx("example3"))
    assert set(d.d_i(i)) == EXAMPLE3_D[i]
    assert set(d.c_i(i)) == EXAMPLE3_C[i]


def test_example3_r_vectors(fx):
    assert set(DiscretePolymatroid(fx("example3")).r_vectors()) == EXAMPLE3_R


def test_example1_excluded_vectors_match_oracle(fx):
    t = fx("example1")
    assert list(DiscretePolymatroid(t).excluded) == oracles.excluded(t.values.tolist(), 2)


# -- worked examples against the literal oracles -------------------------------

@pytest.mark.parametrize("name", ["example1", "example2", "example3"])
def test_examples_match_oracles(fx, name):
    t = fx(name)
    vals, n = t.values.tolist(), t.n
    d = DiscretePolymatroid(t)
    assert list(d.members) == oracles.members(vals, n)
    assert sorted(d.bases) == oracles.bases(oracles.members(vals, n))
    assert sorted(d.r_vectors()) == oracles.r_set(vals, n)
    for i in range(1, n + 1):
        assert sorted(d.d_i(i)) == sorted(oracles.d_i(vals, n, i))
        assert sorted(d.c_i(i)) == sorted(oracles.c_i(vals, n, i))


def test_eq1_r_vectors_match_oracle(fx):
    """The support-maximal flat vectors of the mnetwork_rep1 polymatroid include support-3 ones."""
    t = rank_table_from_matrices(fx("mnetwork_rep1"))
    r = DiscretePolymatroid(t).r_vectors()
    assert sorted(r) == oracles.r_set_flat(t.values.tolist(), t.n)
    assert len(r) == 18
    sizes = sorted(sum(1 for x in v if x) for v in r)
    assert sizes.count(3) == 12 and sizes.count(4) == 6


# -- axiom checker -------------------------------------------------------------

def test_axiom_violations_are_reported():
    assert check_rank_axioms([1, 1]).axiom == "D3"
    v = check_rank_axioms([0, 2, 1, 1])
    assert v.axiom == "D1" and not v
    w = check_rank_axioms([0, 1, 1, 3])
    assert w.axiom == "D2"
    assert "D2" in str(w)


@given(rank_tables())
def test_axiom_checker_matches_all_pairs_oracle(t):
    n, vals = t
    assert bool(check_rank_axioms(RankTable(n, vals))) == oracles.axioms_hold(vals, n)


@given(rank_tables())
def test_axiom_witnesses_are_genuine(t):
    n, vals = t
    table = RankTable(n, vals)
    v = check_rank_axioms(table)
    if v.axiom == "D1":
        a, b = v.witness
        assert a <= b and table(a) > table(b)
    elif v.axiom == "D2":
        a, b = v.witness
        assert table(a | b) + table(a & b) > table(a) + table(b)


@settings(max_examples=500)
@given(representations())
def test_subspace_tables_satisfy_axioms(rep):
    assert check_rank_axioms(rank_table_from_matrices(rep))


# -- membership, members, bases ------------------------------------------------

@given(representations(max_n=3, max_rows=3))
def test_members_match_literal_definition(rep):
    t = rank_table_from_matrices(rep)
    vals = t.values.tolist()
    d = DiscretePolymatroid(t)
    mem = oracles.members(vals, t.n)
    assert list(d.members) == mem
    assert sorted(d.bases) == oracles.bases(mem)
    assert oracles.rank_from_members(mem, t.n) == vals
    for u in itertools.product(*(range(c + 2) for c in t.singletons())):
        assert membership(u, t) == (u in set(mem))


@given(representations(max_n=3, max_rows=3))
def test_sets_match_literal_definitions(rep):
    t = rank_table_from_matrices(rep)
    vals = t.values.tolist()
    d = DiscretePolymatroid(t)
    assert list(d.excluded) == oracles.excluded(vals, t.n)
    assert sorted(d.r_vectors()) == oracles.r_set(vals, t.n) == oracles.r_set_flat(vals, t.n)
    for i in range(1, t.n + 1):
        assert sorted(d.d_i(i)) == sorted(oracles.d_i(vals, t.n, i))
        assert sorted(d.c_i(i)) == sorted(oracles.c_i(vals, t.n, i))


def _all_polymatroid_tables(n, cap):
    """Brute force: every table with values up to n * cap, filtered by the axioms."""
    for rest in itertools.product(range(n * cap + 1), repeat=(1 << n) - 1):
        vals = [0, *rest]
        if all(vals[1 << i] <= cap for i in range(n)) and oracles.axioms_hold(vals, n):
            yield vals


@pytest.mark.parametrize("n", [1, 2, 3])
def test_downward_closure_and_exchange_exhaustive(n):
    """Every polymatroid with n <= 3 and singleton ranks <= 2 has a closed, exchange-ready member set."""
    count = 0
    for vals in oracles.polymatroid_tables(n, 2):
        count += 1
        mem = set(DiscretePolymatroid(RankTable(n, vals)).members)
        for u in mem:
            for j in range(n):
                if u[j]:
                    assert u[:j] + (u[j] - 1,) + u[j + 1:] in mem
        for u in mem:
            for v in mem:
                if sum(u) < sum(v):
                    assert any(u[j] < v[j] and u[:j] + (u[j] + 1,) + u[j + 1:] in mem for j in range(n))
    assert count > 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_table_enumerator_matches_brute_force(n):
    brute = sorted(map(tuple, _all_polymatroid_tables(n, 2)))
    assert brute == sorted(map(tuple, oracles.polymatroid_tables(n, 2)))


# -- helpers -------------------------------------------------------------------

def test_modular_and_scaled_tables():
    m = modular_table([1, 2, 3])
    assert m({1, 3}) == 4 and m({1, 2, 3}) == 6
    r = scale_rank(RankTable.from_function(3, lambda x: min(len(x), 2)), 3)
    assert r({1, 2, 3}) == 6 and r({2}) == 3
    with pytest.raises(ValueError):
        scale_rank(RankTable(1, [0, 2]), 2)


def test_rank_table_shape_errors():
    with pytest.raises(ValueError):
        RankTable(2, [0, 1, 1])
    with pytest.raises(ValueError):
        RankTable(1, [0, -1])
    with pytest.raises(ValueError):
        RankTable.from_values([0, 1, 1])
    assert RankTable.from_values([0, 1]).n == 1


def test_rank_table_indexing_by_mask_and_set():
    t = RankTable(3, np.arange(8))
    assert t(0b101) == 5 and t({1, 3}) == 5
