"""Named lattice builders: chains, cubes, partitions, subspaces."""

import pytest

import latlab as ll
from latlab.builders import Subspace, partition_lattice, subspace_lattice
from latlab.errors import NotPrime, SizeGuardExceeded

import oracles


def test_m3_shape():
    L = ll.m3()
    assert L.size == 5
    assert set(L.covers) == {(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)}
    assert L.labels == ("0", "p", "q", "r", "1")


def test_n5_shape():
    L = ll.n5()
    assert L.size == 5
    assert ll.length(L) == 3 and ll.width(L) == 2
    # one chain of length 3, one incomparable middle element
    assert L.le(1, 3) and not L.le(1, 2) and not L.le(2, 1)


def test_chain():
    for k in range(1, 6):
        C = ll.chain(k)
        assert C.size == k + 1
        assert ll.length(C) == k and ll.width(C) == 1
        assert ll.is_distributive(C).holds


def test_boolean_cube():
    for k in range(1, 5):
        B = ll.boolean(k)
        assert B.size == 2 ** k
        assert ll.length(B) == k and ll.width(B) == max(
            1, len([s for s in oracles.powerset(range(k))
                    if len(s) == k // 2]))
        assert ll.is_distributive(B).holds
    with pytest.raises(SizeGuardExceeded):
        ll.boolean(11)


def test_partition_lattice_sizes():
    # Bell numbers
    for k, bell in ((1, 1), (2, 2), (3, 5), (4, 15), (5, 52)):
        assert partition_lattice(k).size == bell
    with pytest.raises(SizeGuardExceeded):
        partition_lattice(8)


def test_partition_lattice_order_is_refinement():
    P = partition_lattice(3)
    assert P.labels[0] == "0|1|2"  # bottom is the identity partition
    assert P.labels[P.top] == "0 1 2"
    # meet = common refinement, join = transitive closure of the union
    blocks = []
    for lbl in P.labels:
        assign = {}
        for b, grp in enumerate(lbl.split("|")):
            for p in grp.split():
                assign[int(p)] = b
        blocks.append(tuple(assign[i] for i in range(3)))
    for x in range(P.size):
        for y in range(P.size):
            finer = all((blocks[x][a] == blocks[x][b])
                        <= (blocks[y][a] == blocks[y][b])
                        for a in range(3) for b in range(3))
            assert bool(P.le(x, y)) == finer


def test_partition_join_matches_union_closure():
    P = partition_lattice(4)
    labels_to_block = {}
    for i, lbl in enumerate(P.labels):
        assign = {}
        for b, grp in enumerate(lbl.split("|")):
            for p in grp.split():
                assign[int(p)] = min(int(q) for q in grp.split())
        labels_to_block[i] = tuple(assign[j] for j in range(4))
    for x in range(P.size):
        for y in range(P.size):
            want = oracles.brute_join_partition(labels_to_block[x],
                                                labels_to_block[y])
            assert labels_to_block[P.join(x, y)] == want


@pytest.mark.parametrize("p,d,count", [(2, 2, 5), (3, 2, 6), (2, 3, 16),
                                       (3, 3, 28), (5, 2, 8), (2, 4, 67)])
def test_subspace_lattice_counts(p, d, count):
    assert subspace_lattice(p, d).size == count


def test_subspace_lattice_structure():
    L = subspace_lattice(2, 3)
    assert ll.length(L) == 3
    assert len(L.atoms()) == 7 and len(L.coatoms()) == 7  # Fano plane
    assert ll.is_modular(L).holds
    assert ll.is_simple(L)
    # meet/join really are glb/lub for the inclusion order
    leq = oracles.leq_as_lists(L)
    for x in range(L.size):
        for y in range(L.size):
            assert L.join(x, y) == oracles.brute_join(leq, x, y)
            assert L.meet(x, y) == oracles.brute_meet(leq, x, y)


def test_subspace_labels_are_echelon_bases():
    L = subspace_lattice(2, 2)
    assert L.labels[0] == "0"
    assert sorted(L.labels[1:4]) == ["01", "10", "11"]


def test_subspace_rejects_composite_characteristic():
    with pytest.raises(NotPrime):
        subspace_lattice(4, 2)
    with pytest.raises(NotPrime):
        subspace_lattice(1, 2)


def test_subspace_guard():
    with pytest.raises(SizeGuardExceeded):
        subspace_lattice(5, 7)


def test_pg22_isomorphic_to_m3():
    sub = subspace_lattice(2, 2)
    assert ll.find_embedding(ll.m3(), sub) is not None
    assert ll.find_embedding(sub, ll.m3()) is not None
