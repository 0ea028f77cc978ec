"""Constructions of the named finite lattices.

Chains, boolean cubes, M_3, N_5, partition lattices, and the lattices of
subspaces of GF(p)^d.  Subspaces are canonicalized as reduced row-echelon
bases, so equality is syntactic and element indices are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from .core import _from_leq, from_covers
from .errors import NotPrime, SizeGuardExceeded

BOOLEAN_DIM_CAP = 10
PARTITION_POINT_CAP = 7
SUBSPACE_COUNT_CAP = 10_000


def m3():
    """The 5-element modular lattice 0 < p, q, r < 1."""
    return from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
                       labels=["0", "p", "q", "r", "1"], name="m3")


def n5():
    """The pentagon: 0 < a < c < 1 and 0 < b < 1."""
    return from_covers(5, [(0, 1), (1, 3), (0, 2), (2, 4), (3, 4)],
                       labels=["0", "a", "b", "c", "1"], name="n5")


def chain(k):
    """Chain with k cover steps (k+1 elements)."""
    if k < 1:
        raise SizeGuardExceeded("chain needs at least one cover step")
    return from_covers(k + 1, [(i, i + 1) for i in range(k)],
                       labels=[str(i) for i in range(k + 1)], name=f"chain:{k}")


def boolean(k):
    """Boolean lattice of all subsets of a k-element set."""
    if not 1 <= k <= BOOLEAN_DIM_CAP:
        raise SizeGuardExceeded(f"boolean dimension must be in 1..{BOOLEAN_DIM_CAP}")
    masks = sorted(range(1 << k), key=lambda m: (bin(m).count("1"), m))
    index = {m: i for i, m in enumerate(masks)}
    covers = []
    for m in masks:
        for b in range(k):
            if not m & (1 << b):
                covers.append((index[m], index[m | (1 << b)]))
    labels = ["{" + ",".join(str(b) for b in range(k) if m & (1 << b)) + "}"
              for m in masks]
    return from_covers(1 << k, covers, labels=labels, name=f"boolean:{k}")


def _partitions(k):
    """All partitions of {0..k-1} as canonical block arrays, in RGS lex order."""
    out = []

    def rec(i, rgs, used):
        if i == k:
            # Relabel so each block id is its smallest member.
            first = {}
            block = []
            for p, g in enumerate(rgs):
                first.setdefault(g, p)
                block.append(first[g])
            out.append(tuple(block))
            return
        for g in range(used + 1):
            rgs.append(g)
            rec(i + 1, rgs, used + (g == used))
            rgs.pop()

    rec(0, [], 0)
    return out


def partition_lattice(k):
    """Lattice Pi(k) of all equivalence relations on k points, by refinement."""
    if not 1 <= k <= PARTITION_POINT_CAP:
        raise SizeGuardExceeded(f"partition points must be in 1..{PARTITION_POINT_CAP}")
    parts = _partitions(k)
    # Finer partitions (more blocks) come first in a linear extension.
    parts.sort(key=lambda b: (-len(set(b)), b))
    n = len(parts)
    leq_mat = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(parts):
        for j, b in enumerate(parts):
            leq_mat[i, j] = all(b[p] == b[a[p]] for p in range(k))
    labels = []
    for b in parts:
        blocks = {}
        for p, g in enumerate(b):
            blocks.setdefault(g, []).append(p)
        labels.append("|".join(" ".join(map(str, blocks[g])) for g in sorted(blocks)))
    return _from_leq(leq_mat, labels, f"pi:{k}")


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _rref_matrices(p, d, r):
    """All reduced row-echelon r x d matrices of rank r over GF(p)."""
    out = []
    for pivots in combinations(range(d), r):
        free = [(i, j) for i in range(r) for j in range(d)
                if j > pivots[i] and j not in pivots]
        for values in product(range(p), repeat=len(free)):
            mat = [[0] * d for _ in range(r)]
            for i, c in enumerate(pivots):
                mat[i][c] = 1
            for (i, j), v in zip(free, values):
                mat[i][j] = v
            out.append(tuple(tuple(row) for row in mat))
    return out


def _reduce_rows(rows, p, d):
    """Gaussian elimination mod p; returns the RREF basis as a tuple of rows."""
    mat = [list(r) for r in rows]
    basis = []
    pivots = []
    for row in mat:
        row = row[:]
        for prow, pc in zip(basis, pivots):
            if row[pc]:
                f = row[pc]
                row = [(a - f * b) % p for a, b in zip(row, prow)]
        nz = next((j for j, v in enumerate(row) if v), None)
        if nz is None:
            continue
        inv = pow(row[nz], -1, p)
        row = [(v * inv) % p for v in row]
        # Back-substitute into earlier rows.
        for bi, (prow, pc) in enumerate(zip(basis, pivots)):
            if prow[nz]:
                f = prow[nz]
                basis[bi] = [(a - f * b) % p for a, b in zip(prow, row)]
        basis.append(row)
        pivots.append(nz)
    order = sorted(range(len(basis)), key=lambda i: pivots[i])
    return tuple(tuple(basis[i]) for i in order)


def _contains(space, row, p, d):
    """Whether a vector reduces to zero against an RREF basis."""
    row = list(row)
    for prow in space:
        pc = next(j for j, v in enumerate(prow) if v)
        if row[pc]:
            f = row[pc]
            row = [(a - f * b) % p for a, b in zip(row, prow)]
    return not any(row)


@dataclass(frozen=True)
class Subspace:
    p: int
    d: int
    basis: tuple  # RREF rows

    @property
    def dim(self):
        return len(self.basis)

    def label(self):
        if not self.basis:
            return "0"
        return ",".join("".join(str(v) for v in row) for row in self.basis)


def subspace_lattice(p, d, name=None):
    """Lattice of all subspaces of GF(p)^d, ordered by inclusion."""
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    spaces = []
    for r in range(d + 1):
        spaces.extend(Subspace(p, d, m) for m in _rref_matrices(p, d, r))
        if len(spaces) > SUBSPACE_COUNT_CAP:
            raise SizeGuardExceeded(
                f"more than {SUBSPACE_COUNT_CAP} subspaces")
    spaces.sort(key=lambda s: (s.dim, s.basis))
    n = len(spaces)
    leq_mat = np.zeros((n, n), dtype=bool)
    for i, u in enumerate(spaces):
        for j, w in enumerate(spaces):
            if u.dim <= w.dim:
                leq_mat[i, j] = all(_contains(w.basis, row, p, d)
                                    for row in u.basis)
    labels = [s.label() for s in spaces]
    return _from_leq(leq_mat, labels, name or f"subspace:{p}:{d}")
