"""Representations of lattices by equivalence relations.

An equivalence relation on k points is stored as a canonical block array
(block id = smallest member) plus, for the composition hot loop, one int
bitmask of neighbours per point.  A representation maps every lattice
element to an equivalence relation so that meets go to intersections and
joins to n-fold alternating relational products.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import FiniteLattice, generated_sublattice, sublattice, _product_with_map
from .errors import (
    DegreeMismatch,
    NotASublattice,
    PointMismatch,
    SearchBudgetExceeded,
    SizeGuardExceeded,
)

PRODUCT_POINT_CAP = 10_000
SEARCH_LATTICE_CAP = 12
SEARCH_POINT_CAP = 8
SEARCH_NODE_CAP = 20_000_000


@dataclass(frozen=True)
class EquivalenceRelation:
    points: int
    block: tuple  # point -> block id, block id = smallest member

    @staticmethod
    def from_groups(points, groups):
        block = list(range(points))
        for grp in groups:
            lead = min(grp)
            for x in grp:
                block[x] = lead
        # Canonicalize in case groups overlap transitively.
        return _canonical(points, lambda x, y: block[x] == block[y])

    @staticmethod
    def identity(points):
        return EquivalenceRelation(points, tuple(range(points)))

    @staticmethod
    def full(points):
        return EquivalenceRelation(points, (0,) * points)

    def groups(self):
        out = {}
        for x, b in enumerate(self.block):
            out.setdefault(b, []).append(x)
        return [out[b] for b in sorted(out)]

    def related(self, x, y):
        return self.block[x] == self.block[y]


def _canonical(points, related):
    first = {}
    block = []
    for x in range(points):
        for y in range(x):
            if related(x, y):
                block.append(block[y])
                break
        else:
            block.append(x)
    return EquivalenceRelation(points, tuple(block))


@lru_cache(maxsize=65536)
def _rows(rel):
    """Neighbour bitmasks of an equivalence relation."""
    groups = {}
    for x, b in enumerate(rel.block):
        groups[b] = groups.get(b, 0) | (1 << x)
    return tuple(groups[b] for b in rel.block)


@dataclass(frozen=True)
class BinaryRelation:
    points: int
    rows: tuple  # rows[x] = bitmask of y with (x, y) in the relation

    def pairs(self):
        return {(x, y) for x in range(self.points)
                for y in range(self.points) if (self.rows[x] >> y) & 1}

    def is_reflexive(self):
        return all((self.rows[x] >> x) & 1 for x in range(self.points))

    def is_symmetric(self):
        return all(((self.rows[x] >> y) & 1) == ((self.rows[y] >> x) & 1)
                   for x in range(self.points) for y in range(x))

    def is_transitive(self):
        for x in range(self.points):
            acc = 0
            m = self.rows[x]
            while m:
                y = (m & -m).bit_length() - 1
                acc |= self.rows[y]
                m &= m - 1
            if acc & ~self.rows[x]:
                return False
        return True

    def is_equivalence(self):
        return self.is_reflexive() and self.is_symmetric() and self.is_transitive()

    def to_equivalence(self):
        if not self.is_equivalence():
            raise ValueError("relation is not an equivalence")
        return _canonical(self.points,
                          lambda x, y: (self.rows[x] >> y) & 1)


def _check_points(a, b):
    if a.points != b.points:
        raise PointMismatch(f"point counts differ: {a.points} vs {b.points}")


def intersect(a, b):
    """Common refinement of two equivalence relations."""
    _check_points(a, b)
    return _canonical(a.points,
                      lambda x, y: a.block[x] == a.block[y]
                      and b.block[x] == b.block[y])


def _compose(rows_a, rows_b):
    return tuple(_or_rows(rows_b, m) for m in rows_a)


def _or_rows(rows, mask):
    acc = 0
    while mask:
        y = (mask & -mask).bit_length() - 1
        acc |= rows[y]
        mask &= mask - 1
    return acc


def rel_product_n(a, b, n):
    """Alternating relational product with n factors, starting at a."""
    if n < 1:
        raise ValueError("the product needs at least one factor")
    _check_points(a, b)
    ra, rb = _rows(a), _rows(b)
    rows = ra
    for i in range(1, n):
        rows = _compose(rows, rb if i % 2 else ra)
    return BinaryRelation(a.points, rows)


def join_partition(a, b):
    """Transitive closure of the union; the join in Pi(points)."""
    _check_points(a, b)
    parent = list(range(a.points))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for rel in (a, b):
        for x, blk in enumerate(rel.block):
            union(x, blk)
    return _canonical(a.points, lambda x, y: find(x) == find(y))


@dataclass(frozen=True)
class Representation:
    lattice: FiniteLattice
    points: int
    eps: tuple  # element index -> EquivalenceRelation
    degree: int


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    violations: tuple

    def to_json(self):
        return {"ok": self.ok, "violations": [list(v) for v in self.violations]}


def verify_representation(rep):
    """Check injectivity, the meet condition, and the degree-n join condition.

    Violations are reported, not raised; each entry is (kind, a, b).
    """
    L = rep.lattice
    eps = rep.eps
    violations = []
    seen = {}
    for a, rel in enumerate(eps):
        if rel.points != rep.points:
            violations.append(("points", a, a))
        if rel in seen:
            violations.append(("injectivity", seen[rel], a))
        else:
            seen[rel] = a
    n = L.size
    for a in range(n):
        for b in range(a, n):
            m = L.meet(a, b)
            if intersect(eps[a], eps[b]) != eps[m]:
                violations.append(("meet", a, b))
            j = L.join(a, b)
            target = _rows(eps[j])
            for first, second in ((a, b), (b, a)):
                prod = rel_product_n(eps[first], eps[second], rep.degree)
                if not prod.is_equivalence() or prod.rows != target:
                    violations.append(("join", first, second))
                    break
        for b in range(n):
            if L.leq[a, b] and intersect(eps[a], eps[b]) != eps[a]:
                violations.append(("monotone", a, b))
    return VerificationReport(not violations, tuple(violations))


def restrict_representation(rep, members):
    """Representation of a sublattice; points and degree are unchanged."""
    members = sorted(set(members))
    if generated_sublattice(rep.lattice, members) != members:
        raise NotASublattice("the element set is not closed under meet and join")
    sub, mapping = sublattice(rep.lattice, members)
    return Representation(sub, rep.points,
                          tuple(rep.eps[m] for m in mapping), rep.degree)


def product_representation(r1, r2):
    """Sort-wise product: points multiply, relations act componentwise."""
    if r1.degree != r2.degree:
        raise DegreeMismatch(f"degrees differ: {r1.degree} vs {r2.degree}")
    k1, k2 = r1.points, r2.points
    if k1 * k2 > PRODUCT_POINT_CAP:
        raise SizeGuardExceeded(f"product would need {k1 * k2} points")
    lat, index_of = _product_with_map(r1.lattice, r2.lattice)
    eps = [None] * lat.size
    for (a1, a2), idx in index_of.items():
        e1, e2 = r1.eps[a1], r2.eps[a2]
        eps[idx] = _canonical(
            k1 * k2,
            lambda x, y, e1=e1, e2=e2:
                e1.block[x // k2] == e1.block[y // k2]
                and e2.block[x % k2] == e2.block[y % k2])
    return Representation(lat, k1 * k2, tuple(eps), r1.degree)


def _all_partitions(k):
    """Every partition of k points, in restricted-growth lex order."""
    out = []

    def rec(i, rgs, used):
        if i == k:
            first = {}
            block = []
            for p, g in enumerate(rgs):
                first.setdefault(g, p)
                block.append(first[g])
            out.append(EquivalenceRelation(k, tuple(block)))
            return
        for g in range(used + 1):
            rgs.append(g)
            rec(i + 1, rgs, used + (g == used))
            rgs.pop()

    rec(0, [], 0)
    return out


def search_representation(L, max_points, n, normalize=False,
                          node_budget=SEARCH_NODE_CAP):
    """Exhaustive backtracking search for a degree-n representation.

    Tries every point count from 1 to max_points; None certifies that no
    representation exists in that range.  With normalize, the bottom is
    pinned to the identity partition (sound for the None certificate, since
    quotienting all relations by eps(bottom) preserves the conditions).
    """
    if L.size > SEARCH_LATTICE_CAP:
        raise SizeGuardExceeded(f"search limited to {SEARCH_LATTICE_CAP} elements")
    if max_points > SEARCH_POINT_CAP:
        raise SizeGuardExceeded(f"search limited to {SEARCH_POINT_CAP} points")
    if n < 2:
        raise ValueError("degree must be >= 2")
    N = L.size
    # Pairs (f, g), f <= g < e, join(f, g) = e, checked when e is assigned.
    join_pairs = [[] for _ in range(N)]
    for f in range(N):
        for g in range(f + 1, N):
            j = L.join(f, g)
            if j > g:
                join_pairs[j].append((f, g))
    nodes = 0
    for k in range(1, max_points + 1):
        parts = _all_partitions(k)
        masks = []
        for rel in parts:
            rows = _rows(rel)
            m = 0
            for x, row in enumerate(rows):
                m |= row << (x * k)
            masks.append(m)
        identity_index = next(
            i for i, rel in enumerate(parts) if rel.block == tuple(range(k)))
        assigned = [None] * N  # indices into parts

        def extend(e):
            nonlocal nodes
            if e == N:
                return True
            candidates = range(len(parts))
            if normalize and e == 0:
                candidates = [identity_index]
            for ci in candidates:
                nodes += 1
                if nodes > node_budget:
                    raise SearchBudgetExceeded(
                        f"representation search exceeded {node_budget} nodes")
                mask = masks[ci]
                ok = True
                for f in range(e):
                    fm = masks[assigned[f]]
                    if assigned[f] == ci:  # injectivity
                        ok = False
                        break
                    if mask & fm != masks[assigned[L.meet(f, e)]]:
                        ok = False
                        break
                if ok:
                    for f, g in join_pairs[e]:
                        pf, pg = parts[assigned[f]], parts[assigned[g]]
                        for first, second in ((pf, pg), (pg, pf)):
                            prod = rel_product_n(first, second, n)
                            pm = 0
                            for x, row in enumerate(prod.rows):
                                pm |= row << (x * k)
                            if pm != mask:
                                ok = False
                                break
                        if not ok:
                            break
                if ok:
                    assigned[e] = ci
                    if extend(e + 1):
                        return True
                    assigned[e] = None
            return False

        if extend(0):
            return Representation(L, k,
                                  tuple(parts[ci] for ci in assigned), n)
    return None
