"""Finite bounded lattices as dense index tables.

Elements are integers 0..N-1 in a fixed linear extension (index 0 is the
bottom, index N-1 the top; i < j whenever element i lies below element j).
The order relation and the meet/join tables are precomputed numpy arrays,
so identity scans reduce to fancy indexing.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass

import numpy as np

from .errors import (
    CyclicCovers,
    IndexOutOfRange,
    NotALattice,
    NotComparable,
    SearchBudgetExceeded,
    SizeGuardExceeded,
)

PRODUCT_SIZE_CAP = 20000
WIDTH_SIZE_CAP = 64
EMBED_NODE_CAP = 5_000_000


def eval_budget(default):
    """Evaluation budget, overridable through the LATLAB_BUDGET env var."""
    raw = os.environ.get("LATLAB_BUDGET")
    if raw is None:
        return default
    return int(float(raw))


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    size: int
    labels: tuple
    leq: np.ndarray          # (N, N) bool, leq[x, y] iff x <= y
    meet_table: np.ndarray   # (N, N) int
    join_table: np.ndarray   # (N, N) int
    covers: tuple            # sorted (lower, upper) pairs
    bottom: int
    top: int
    name: str = "lattice"

    def _check_index(self, x):
        if not (isinstance(x, (int, np.integer)) and 0 <= x < self.size):
            raise IndexOutOfRange(f"element index {x} not in 0..{self.size - 1}")

    def le(self, x, y):
        self._check_index(x)
        self._check_index(y)
        return bool(self.leq[x, y])

    def meet(self, x, y):
        self._check_index(x)
        self._check_index(y)
        return int(self.meet_table[x, y])

    def join(self, x, y):
        self._check_index(x)
        self._check_index(y)
        return int(self.join_table[x, y])

    def atoms(self):
        return [hi for (lo, hi) in self.covers if lo == self.bottom]

    def coatoms(self):
        return sorted(lo for (lo, hi) in self.covers if hi == self.top)

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"FiniteLattice({self.name!r}, size={self.size})"

    def rename(self, name):
        return FiniteLattice(self.size, self.labels, self.leq, self.meet_table,
                             self.join_table, self.covers, self.bottom, self.top, name)


def leq(L, x, y):
    return L.le(x, y)


def meet(L, x, y):
    return L.meet(x, y)


def join(L, x, y):
    return L.join(x, y)


def _tables_from_leq(leq_mat):
    """Meet/join tables for an order matrix whose indices are a linear extension.

    Raises NotALattice on the first pair without a unique glb or lub.
    """
    n = leq_mat.shape[0]
    meet_t = np.empty((n, n), dtype=np.int32)
    join_t = np.empty((n, n), dtype=np.int32)
    for x in range(n):
        # Upper bounds of {x, y} for every y at once: ub[y, z] iff x<=z and y<=z.
        ub = leq_mat[x][None, :] & leq_mat
        if not ub.any(axis=1).all():
            y = int(np.flatnonzero(~ub.any(axis=1))[0])
            raise NotALattice(x, y, "lub")
        # In a linear extension the lub, if unique, is the least-index upper bound.
        least = np.argmax(ub, axis=1)
        bad = ub & ~leq_mat[least]
        if bad.any():
            y = int(np.flatnonzero(bad.any(axis=1))[0])
            raise NotALattice(x, y, "lub")
        join_t[x] = least
        # Lower bounds: lb[z, y] iff z<=x and z<=y.
        lb = leq_mat[:, x][:, None] & leq_mat
        if not lb.any(axis=0).all():
            y = int(np.flatnonzero(~lb.any(axis=0))[0])
            raise NotALattice(x, y, "glb")
        greatest = n - 1 - np.argmax(lb[::-1], axis=0)
        bad = lb & ~leq_mat[:, greatest]
        if bad.any():
            y = int(np.flatnonzero(bad.any(axis=0))[0])
            raise NotALattice(x, y, "glb")
        meet_t[x] = greatest
    return meet_t, join_t


def _covers_from_leq(leq_mat):
    strict = leq_mat & ~np.eye(leq_mat.shape[0], dtype=bool)
    red = strict & ~(strict.astype(np.uint8) @ strict.astype(np.uint8)).astype(bool)
    return tuple(sorted((int(lo), int(hi)) for lo, hi in zip(*np.nonzero(red))))


def _from_leq(leq_mat, labels, name="lattice"):
    """Build a FiniteLattice from an order matrix already in a linear extension."""
    n = leq_mat.shape[0]
    if n == 0:
        raise NotALattice(0, 0, "lub")
    idx = np.arange(n)
    if not all(leq_mat[i, j] <= (i <= j) for i in idx for j in idx if i != j):
        # Callers are expected to pre-sort; this is a defensive check.
        raise CyclicCovers("order matrix is not in a linear extension")
    leq_mat = np.ascontiguousarray(leq_mat, dtype=bool)
    meet_t, join_t = _tables_from_leq(leq_mat)
    covers = _covers_from_leq(leq_mat)
    return FiniteLattice(n, tuple(labels), leq_mat, meet_t, join_t,
                         covers, 0, n - 1, name)


def _from_covers_with_map(n, covers, labels=None, name="lattice"):
    """from_covers plus the old-index -> new-index permutation."""
    if n <= 0:
        raise IndexOutOfRange("lattice must have at least one element")
    succ = [[] for _ in range(n)]
    indeg = [0] * n
    for lo, hi in covers:
        for v in (lo, hi):
            if not (isinstance(v, (int, np.integer)) and 0 <= v < n):
                raise IndexOutOfRange(f"cover index {v} not in 0..{n - 1}")
        succ[lo].append(hi)
        indeg[hi] += 1
    # Stable topological sort: always emit the smallest available old index,
    # so input already in a linear extension round-trips to the identity map.
    heap = [i for i in range(n) if indeg[i] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) != n:
        raise CyclicCovers("cover digraph contains a cycle")
    old2new = [0] * n
    for new, old in enumerate(order):
        old2new[old] = new
    # Reachability over the reindexed cover DAG, as bitsets.
    reach = [0] * n
    for i in range(n - 1, -1, -1):
        old = order[i]
        r = 1 << i
        for w in succ[old]:
            r |= reach[old2new[w]]
        reach[i] = r
    leq_mat = np.zeros((n, n), dtype=bool)
    for i in range(n):
        r = reach[i]
        for j in range(i, n):
            if (r >> j) & 1:
                leq_mat[i, j] = True
    if labels is None:
        labels = [str(i) for i in range(n)]
    new_labels = [labels[order[i]] for i in range(n)]
    return _from_leq(leq_mat, new_labels, name), old2new


def from_covers(n, covers, labels=None, name="lattice"):
    """Build a lattice from its cover pairs, reindexing to a linear extension."""
    lat, _ = _from_covers_with_map(n, covers, labels, name)
    return lat


def _product_with_map(A, B, name=None):
    n = A.size * B.size
    if n > PRODUCT_SIZE_CAP:
        raise SizeGuardExceeded(f"product size {n} exceeds cap {PRODUCT_SIZE_CAP}")
    # Pair (a, b) gets index a*|B| + b; lexicographic pair order is a linear
    # extension of the componentwise order.
    leq_mat = np.kron(A.leq, B.leq)
    nb = B.size
    meet_t = (A.meet_table.astype(np.int64).repeat(nb, 0).repeat(nb, 1) * nb
              + np.tile(B.meet_table, (A.size, A.size))).astype(np.int32)
    join_t = (A.join_table.astype(np.int64).repeat(nb, 0).repeat(nb, 1) * nb
              + np.tile(B.join_table, (A.size, A.size))).astype(np.int32)
    labels = tuple(f"({la},{lb})" for la in A.labels for lb in B.labels)
    covers = []
    for lo, hi in A.covers:
        covers.extend((lo * nb + b, hi * nb + b) for b in range(nb))
    for lo, hi in B.covers:
        covers.extend((a * nb + lo, a * nb + hi) for a in range(A.size))
    lat = FiniteLattice(n, labels, leq_mat, meet_t, join_t,
                        tuple(sorted(covers)), 0, n - 1,
                        name or f"{A.name}x{B.name}")
    index_of = {(a, b): a * nb + b for a in range(A.size) for b in range(B.size)}
    return lat, index_of


def direct_product(A, B, name=None):
    lat, _ = _product_with_map(A, B, name)
    return lat


def sublattice(A, members, name=None):
    """Induced lattice on a subset already closed under meet and join.

    Returns (lattice, members) where new index i corresponds to parent
    element members[i].
    """
    members = sorted(set(members))
    for m in members:
        A._check_index(m)
    sub = np.ix_(members, members)
    lat = _from_leq(A.leq[sub], [A.labels[m] for m in members],
                    name or f"{A.name}|{len(members)}")
    return lat, members


def interval(L, b, a, name=None):
    """The interval sublattice [b, a], plus the new-index -> parent-index map."""
    L._check_index(b)
    L._check_index(a)
    if not L.leq[b, a]:
        raise NotComparable(f"{b} is not below {a}")
    members = [x for x in range(L.size) if L.leq[b, x] and L.leq[x, a]]
    return sublattice(L, members, name or f"[{b},{a}]{L.name}")


def dual(L):
    """Order-reversed lattice; index i maps to old index N-1-i."""
    rev = L.leq.T[::-1, :][:, ::-1]
    return _from_leq(np.ascontiguousarray(rev), L.labels[::-1], f"dual({L.name})")


def generated_sublattice(L, seed):
    """Least subset containing seed and closed under meet and join."""
    seed = sorted(set(seed))
    if not seed:
        raise IndexOutOfRange("seed must be nonempty")
    for m in seed:
        L._check_index(m)
    members = set(seed)
    while True:
        idx = np.array(sorted(members))
        grid = np.ix_(idx, idx)
        new = set(L.meet_table[grid].ravel().tolist())
        new |= set(L.join_table[grid].ravel().tolist())
        if new <= members:
            return sorted(members)
        members |= new


def find_embedding(A, B, node_budget=None):
    """Exhaustive backtracking search for a meet/join-preserving injection A -> B.

    Returns the lexicographically least embedding as a list (index in A ->
    index in B), or None if no embedding exists.
    """
    if node_budget is None:
        node_budget = EMBED_NODE_CAP
    if A.size > B.size:
        return None
    na = A.size
    # Pairs (f, g), f <= g < e, whose join is e: checked when e is assigned.
    join_pairs = [[] for _ in range(na)]
    for f in range(na):
        for g in range(f, na):
            j = int(A.join_table[f, g])
            if j > g:
                join_pairs[j].append((f, g))
    mapping = [-1] * na
    used = [False] * B.size
    nodes = 0

    leq_a, leq_b = A.leq, B.leq
    meet_a, meet_b = A.meet_table, B.meet_table
    join_b = B.join_table

    def extend(e):
        nonlocal nodes
        if e == na:
            return True
        for cand in range(B.size):
            if used[cand]:
                continue
            nodes += 1
            if nodes > node_budget:
                raise SearchBudgetExceeded(f"embedding search exceeded {node_budget} nodes")
            ok = True
            for f in range(e):
                mf = mapping[f]
                if leq_a[f, e] != leq_b[mf, cand] or leq_a[e, f] != leq_b[cand, mf]:
                    ok = False
                    break
                if mapping[meet_a[f, e]] != meet_b[mf, cand]:
                    ok = False
                    break
            if ok:
                for f, g in join_pairs[e]:
                    if join_b[mapping[f], mapping[g]] != cand:
                        ok = False
                        break
            if ok:
                mapping[e] = cand
                used[cand] = True
                if extend(e + 1):
                    return True
                used[cand] = False
                mapping[e] = -1
        return False

    if extend(0):
        return list(mapping)
    return None


def length(L):
    """Longest chain, counted in cover steps."""
    height = [0] * L.size
    for lo, hi in L.covers:
        height[hi] = max(height[hi], height[lo] + 1)
    # covers are sorted and indices are a linear extension, but a single pass
    # needs topological order on both endpoints; iterate to fixpoint instead.
    changed = True
    while changed:
        changed = False
        for lo, hi in L.covers:
            if height[lo] + 1 > height[hi]:
                height[hi] = height[lo] + 1
                changed = True
    return max(height)


def heights(L):
    h = [0] * L.size
    for x in range(L.size):
        for lo, hi in L.covers:
            if h[lo] + 1 > h[hi]:
                h[hi] = h[lo] + 1
    return h


def width(L):
    """Maximum antichain size, by exact branch and bound."""
    n = L.size
    if n > WIDTH_SIZE_CAP:
        raise SizeGuardExceeded(f"width search limited to {WIDTH_SIZE_CAP} elements")
    incomp = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and not L.leq[i, j] and not L.leq[j, i]:
                incomp[i] |= 1 << j
    best = 0

    def grow(cand, count):
        nonlocal best
        if count + bin(cand).count("1") <= best:
            return
        if cand == 0:
            best = max(best, count)
            return
        v = (cand & -cand).bit_length() - 1
        grow(cand & incomp[v], count + 1)
        grow(cand & ~(1 << v), count)

    grow((1 << n) - 1, 0)
    return best
