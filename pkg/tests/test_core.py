"""Core lattice type: construction, tables, products, intervals, embeddings."""

import numpy as np
import pytest

import latlab as ll
from latlab.core import from_covers, heights
from latlab.errors import (
    CyclicCovers,
    IndexOutOfRange,
    NotALattice,
    NotComparable,
    SizeGuardExceeded,
)

import oracles


SMALL = [
    lambda: ll.m3(),
    lambda: ll.n5(),
    lambda: ll.chain(4),
    lambda: ll.boolean(3),
    lambda: ll.partition_lattice(3),
    lambda: ll.subspace_lattice(2, 2),
]


@pytest.mark.parametrize("make", SMALL)
def test_tables_match_brute_force(make):
    L = make()
    leq = oracles.leq_as_lists(L)
    for x in range(L.size):
        for y in range(L.size):
            assert L.join(x, y) == oracles.brute_join(leq, x, y)
            assert L.meet(x, y) == oracles.brute_meet(leq, x, y)


@pytest.mark.parametrize("make", SMALL)
def test_linear_extension_and_bounds(make):
    L = make()
    assert L.bottom == 0 and L.top == L.size - 1
    for lo, hi in L.covers:
        assert lo < hi  # indices form a linear extension
    assert all(L.le(0, x) and L.le(x, L.top) for x in range(L.size))


def test_covers_are_transitive_reduction():
    L = ll.boolean(3)
    cov = set(L.covers)
    for x in range(L.size):
        for y in range(L.size):
            if x == y or not L.le(x, y):
                continue
            between = [z for z in range(L.size)
                       if z not in (x, y) and L.le(x, z) and L.le(z, y)]
            assert ((x, y) in cov) == (not between)


def test_from_covers_rejects_non_lattice():
    # hexagon: two minimal upper bounds for the two atoms
    with pytest.raises(NotALattice):
        from_covers(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4),
                        (3, 5), (4, 5)])


def test_from_covers_rejects_cycle():
    with pytest.raises(CyclicCovers):
        from_covers(4, [(0, 1), (1, 0), (1, 2), (2, 3)])


def test_index_checks():
    L = ll.m3()
    with pytest.raises(IndexOutOfRange):
        L.join(0, 5)
    with pytest.raises(IndexOutOfRange):
        L.meet(-1, 0)


def test_atoms_coatoms():
    L = ll.m3()
    assert L.atoms() == [1, 2, 3]
    assert L.coatoms() == [1, 2, 3]
    B = ll.boolean(3)
    assert len(B.atoms()) == 3 and len(B.coatoms()) == 3


def test_direct_product_componentwise():
    A, B = ll.m3(), ll.chain(1)
    P = ll.direct_product(A, B)
    assert P.size == 10
    leq = oracles.leq_as_lists(P)
    for x in range(P.size):
        for y in range(P.size):
            assert P.join(x, y) == oracles.brute_join(leq, x, y)
    # pairs order as (a, b) -> a*|B| + b
    for a in range(A.size):
        for b in range(B.size):
            for c in range(A.size):
                for d in range(B.size):
                    expect = A.le(a, c) and B.le(b, d)
                    assert bool(P.le(a * B.size + b, c * B.size + d)) == expect


def test_product_of_chains_is_boolean():
    P = ll.direct_product(ll.chain(1), ll.chain(1))
    assert P.size == 4 and ll.is_distributive(P).holds


def test_interval_and_sublattice():
    L = ll.m3()
    sub, members = ll.interval(L, 0, 1)
    assert sub.size == 2 and members == [0, 1]
    # whole-lattice interval is the identity reindexing
    whole, members = ll.interval(L, 0, L.top)
    assert whole.size == L.size and members == list(range(L.size))
    with pytest.raises(NotComparable):
        ll.interval(L, 1, 2)


def test_sublattice_keeps_labels():
    L = ll.n5()
    sub, members = ll.sublattice(L, [0, 1, 3, 4])
    assert [sub.labels[i] for i in range(4)] == [L.labels[m] for m in members]


def test_dual_involution():
    for make in (ll.m3, ll.n5):
        L = make()
        D = ll.dual(L)
        assert D.size == L.size
        for x in range(L.size):
            for y in range(L.size):
                assert bool(D.le(x, y)) == bool(
                    L.le(L.size - 1 - y, L.size - 1 - x))
        assert ll.find_embedding(L, ll.dual(D)) is not None


def test_generated_sublattice_closure():
    L = ll.boolean(3)
    gen = ll.generated_sublattice(L, L.atoms())
    assert gen == list(range(L.size))
    gen = ll.generated_sublattice(L, [0])
    assert gen == [0]
    # oracle: smallest closed superset over the powerset
    seed = [1, 2]
    got = set(ll.generated_sublattice(L, seed))
    best = None
    for sub in oracles.powerset(range(L.size)):
        s = set(sub)
        if not set(seed) <= s:
            continue
        closed = all(L.meet(a, b) in s and L.join(a, b) in s
                     for a in s for b in s)
        if closed and (best is None or len(s) < len(best)):
            best = s
    assert got == best


def test_find_embedding_basic():
    m = ll.m3()
    sub22 = ll.subspace_lattice(2, 2)
    fwd = ll.find_embedding(m, sub22)
    back = ll.find_embedding(sub22, m)
    assert fwd is not None and back is not None
    for x in range(m.size):
        for y in range(m.size):
            assert sub22.meet(fwd[x], fwd[y]) == fwd[m.meet(x, y)]
            assert sub22.join(fwd[x], fwd[y]) == fwd[m.join(x, y)]
    # N_5 cannot sit inside a modular lattice
    assert ll.find_embedding(ll.n5(), ll.boolean(3)) is None
    # chain into anything tall enough
    assert ll.find_embedding(ll.chain(2), ll.m3()) is not None
    assert ll.find_embedding(ll.boolean(3), ll.m3()) is None


def test_find_embedding_is_canonical():
    # least image of the bottom, then of element 1, and so on
    got = ll.find_embedding(ll.chain(1), ll.m3())
    assert got == [0, 1]


@pytest.mark.parametrize("make", SMALL)
def test_length_width_against_oracles(make):
    L = make()
    assert ll.length(L) == oracles.brute_length(L)
    assert ll.width(L) == oracles.brute_width(L)


def test_width_guard():
    with pytest.raises(SizeGuardExceeded):
        ll.width(ll.boolean(7))


def test_heights_grade_boolean():
    h = heights(ll.boolean(3))
    assert sorted(h) == [0, 1, 1, 1, 2, 2, 2, 3]
    for lo, hi in ll.boolean(3).covers:
        assert h[hi] == h[lo] + 1


def test_eval_budget_env(monkeypatch):
    from latlab.core import eval_budget
    monkeypatch.delenv("LATLAB_BUDGET", raising=False)
    assert eval_budget(123) == 123
    monkeypatch.setenv("LATLAB_BUDGET", "77")
    assert eval_budget(123) == 77
