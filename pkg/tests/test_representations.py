"""Equivalence relations, relational products, and lattice representations."""

import pytest

import latlab as ll
from latlab.errors import DegreeMismatch, NotASublattice, PointMismatch
from latlab.representations import (
    EquivalenceRelation as E,
    Representation,
    intersect,
    join_partition,
    product_representation,
    rel_product_n,
    restrict_representation,
    search_representation,
    verify_representation,
)

import oracles


def klein_rep():
    """M_3 as the subgroup lattice of Z_2 x Z_2 acting on 4 points."""
    M = ll.m3()
    eps = (E.identity(4),
           E.from_groups(4, [[0, 1], [2, 3]]),
           E.from_groups(4, [[0, 2], [1, 3]]),
           E.from_groups(4, [[0, 3], [1, 2]]),
           E.full(4))
    return Representation(M, 4, eps, 2)


def test_canonical_block_ids():
    r = E.from_groups(5, [[3, 1], [0, 4], [2]])
    assert r.block == (0, 1, 2, 1, 0)
    assert r.related(1, 3) and not r.related(0, 1)
    assert sorted(map(sorted, r.groups())) == [[0, 4], [1, 3], [2]]


def test_identity_and_full():
    assert E.identity(3).block == (0, 1, 2)
    assert E.full(3).block == (0, 0, 0)


def test_intersect_matches_pair_oracle():
    a = E.from_groups(6, [[0, 1, 2], [3, 4, 5]])
    b = E.from_groups(6, [[0, 1], [2, 3], [4, 5]])
    got = intersect(a, b)
    assert oracles.eq_pairs(got) == oracles.eq_pairs(a) & oracles.eq_pairs(b)
    with pytest.raises(PointMismatch):
        intersect(a, E.identity(5))


def test_join_partition_matches_union_closure():
    a = E.from_groups(6, [[0, 1], [2, 3], [4, 5]])
    b = E.from_groups(6, [[1, 2], [3, 4], [0], [5]])
    got = join_partition(a, b)
    assert got.block == oracles.brute_join_partition(a.block, b.block)
    assert got.block == (0, 0, 0, 0, 0, 0)


def test_rel_product_matches_brute_composition():
    a = E.from_groups(5, [[0, 1], [2, 3], [4]])
    b = E.from_groups(5, [[1, 2], [3, 4], [0]])
    for n in (1, 2, 3, 4):
        got = rel_product_n(a, b, n)
        seq = [oracles.eq_pairs(a) if i % 2 == 0 else oracles.eq_pairs(b)
               for i in range(n)]
        want = oracles.brute_rel_product(seq, 5)
        assert got.pairs() == want


def test_rel_product_of_permuting_pair_is_join():
    a = E.from_groups(4, [[0, 1], [2, 3]])
    b = E.from_groups(4, [[0, 2], [1, 3]])
    prod = rel_product_n(a, b, 2)
    assert prod.is_equivalence()
    assert prod.to_equivalence().block == join_partition(a, b).block


def test_binary_relation_predicates():
    a = E.from_groups(4, [[0, 1], [2, 3]])
    b = E.from_groups(4, [[1, 2], [0], [3]])
    once = rel_product_n(a, b, 2)  # a then b: not symmetric
    assert once.is_reflexive()
    assert not once.is_symmetric()
    assert not once.is_equivalence()


def test_klein_rep_verifies():
    rpt = verify_representation(klein_rep())
    assert rpt.ok and rpt.violations == ()
    doc = rpt.to_json()
    assert doc["ok"] is True


def test_broken_rep_reports_violations():
    M = ll.m3()
    eps = (E.identity(4),
           E.from_groups(4, [[0, 1], [2, 3]]),
           E.from_groups(4, [[0, 1], [2, 3]]),  # collides with eps(p)
           E.from_groups(4, [[0, 3], [1, 2]]),
           E.full(4))
    rpt = verify_representation(Representation(M, 4, eps, 2))
    assert not rpt.ok and rpt.violations


def test_join_failure_detected():
    # equality: meets work but joins do not 2-permute
    N = ll.n5()
    eps = (E.identity(4),
           E.from_groups(4, [[0, 1], [2], [3]]),
           E.from_groups(4, [[0, 2], [1], [3]]),
           E.from_groups(4, [[0, 1], [2, 3]]),
           E.full(4))
    rpt = verify_representation(Representation(N, 4, eps, 2))
    assert not rpt.ok


def test_restriction():
    rep = klein_rep()
    sub = restrict_representation(rep, [0, 1, 2, 4])
    assert sub.lattice.size == 4
    assert verify_representation(sub).ok
    with pytest.raises(NotASublattice):
        restrict_representation(rep, [0, 1, 2])  # join of p,q escapes


def test_product_representation():
    rep = klein_rep()
    prod = product_representation(rep, rep)
    assert prod.points == 16
    assert prod.lattice.size == 25
    assert verify_representation(prod).ok
    other = Representation(rep.lattice, rep.points, rep.eps, 3)
    with pytest.raises(DegreeMismatch):
        product_representation(rep, other)


def test_search_finds_m3_at_four_points():
    found = search_representation(ll.m3(), 4, 2)
    assert found is not None
    assert found.points == 4
    assert verify_representation(found).ok


def test_search_certifies_none_for_n5():
    assert search_representation(ll.n5(), 5, 2) is None


def test_search_chain_trivial():
    found = search_representation(ll.chain(1), 2, 2)
    assert found is not None and verify_representation(found).ok


def test_search_normalized():
    found = search_representation(ll.m3(), 4, 2, normalize=True)
    assert found is not None
    assert found.eps[0].block == tuple(range(found.points))
    assert verify_representation(found).ok


def test_search_determinism():
    a = search_representation(ll.m3(), 4, 2)
    b = search_representation(ll.m3(), 4, 2)
    assert [r.block for r in a.eps] == [r.block for r in b.eps]
