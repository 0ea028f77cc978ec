"""Lattice identities and congruence-theoretic properties.

Identity checks scan assignments in linear-extension order, so a returned
counterexample is always the lexicographically least one.  The inner loops
are vectorized over the precomputed meet/join tables; a symmetric identity
(n-distributivity) is scanned over sorted variable tuples, which still
yields the lexicographically least counterexample because the identity is
invariant under permuting its y-variables.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np

from .core import FiniteLattice, eval_budget, from_covers, _from_leq
from .errors import BudgetExceeded, SizeGuardExceeded, TrivialLattice

N_DIST_BUDGET = 500_000_000
ARGUESIAN_EXHAUSTIVE_CAP = 24
CONGRUENCE_COUNT_CAP = 4096


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    holds: bool
    counterexample: dict | None
    evaluations: int
    exhaustive: bool = True

    def to_json(self):
        return {
            "identity": self.identity,
            "holds": self.holds,
            "counterexample": self.counterexample,
            "evaluations": self.evaluations,
        }


def is_modular(L):
    """x <= z implies x + (y * z) = (x + y) * z, scanned over all x, y, z."""
    n = L.size
    M, J, leq = L.meet_table, L.join_table, L.leq
    evals = 0
    for x in range(n):
        mask = leq[x]
        cnt = int(mask.sum())
        for y in range(n):
            lhs = J[x, M[y]]
            rhs = M[J[x, y]]
            viol = mask & (lhs != rhs)
            if viol.any():
                z = int(np.argmax(viol))
                evals += int(mask[: z + 1].sum())
                return IdentityReport("modular", False,
                                      {"x": x, "y": y, "z": z}, evals)
            evals += cnt
    return IdentityReport("modular", True, None, evals)


def is_distributive(L):
    """x * (y + z) = (x * y) + (x * z) over all triples."""
    n = L.size
    M, J = L.meet_table, L.join_table
    evals = 0
    for x in range(n):
        for y in range(n):
            lhs = M[x][J[y]]
            rhs = J[M[x, y]][M[x]]
            viol = lhs != rhs
            if viol.any():
                z = int(np.argmax(viol))
                return IdentityReport("distributive", False,
                                      {"x": x, "y": y, "z": z}, evals + z + 1)
            evals += n
    return IdentityReport("distributive", True, None, evals)


def is_n_distributive(L, n):
    """Huhn n-distributivity: x * (y_0 + ... + y_n) = sum_j x * (sum_{i!=j} y_i).

    The identity is symmetric in the y's, so the scan fixes a sorted prefix
    (y_0 <= ... <= y_{n-1}) and vectorizes over (x, y_n); the canonical
    counterexample is recovered as the least (x, sorted y's) violation.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    N = L.size
    if N ** (n + 2) > eval_budget(N_DIST_BUDGET):
        raise BudgetExceeded(
            f"{N}^{n + 2} assignments exceed the n-distributivity budget")
    M, J = L.meet_table, L.join_table
    xs = np.arange(N)
    evals = 0
    best = None
    for ys in combinations_with_replacement(range(N), n):
        s = 0  # join of the fixed prefix; 0 is the bottom, the empty join
        for y in ys:
            s = J[s, y]
        lhs = M[:, J[s]]  # (x, w) grid, w = y_n
        # Term omitting y_n: x * s, constant in w.
        rhs = np.broadcast_to(M[:, s][:, None], (N, N))
        for j in range(n):
            sj = 0
            for i, y in enumerate(ys):
                if i != j:
                    sj = J[sj, y]
            rhs = J[rhs, M[:, J[sj]]]
        viol = lhs != rhs
        evals += N * N
        if viol.any():
            vx, vw = np.nonzero(viol)
            for x, w in zip(vx.tolist(), vw.tolist()):
                cand = (x,) + tuple(sorted(ys + (w,)))
                if best is None or cand < best:
                    best = cand
    if best is None:
        return IdentityReport(f"{n}-distributive", True, None, evals)
    cx = {"x": best[0]}
    cx.update({f"y{i}": v for i, v in enumerate(best[1:])})
    return IdentityReport(f"{n}-distributive", False, cx, evals)


def _arguesian_block(L, a0, a1, a2, b0):
    """Violation grid over (b1, b2) of the Arguesian inequality."""
    M, J, leq = L.meet_table, L.join_table, L.leq
    N = L.size
    t1 = M[J[a0, b0], J[a1]]            # (a0+b0)(a1+b1), indexed by b1
    p = M[t1[:, None], J[a2][None, :]]  # further meet with a2+b2
    c2 = M[J[a0, a1], J[b0]]            # (a0+a1)(b0+b1), by b1
    c1 = M[J[a0, a2], J[b0]]            # (a0+a2)(b0+b2), by b2
    c0 = M[J[a1, a2], J]                # (a1+a2)(b1+b2), grid
    c = M[c2[:, None], J[c0, c1[None, :]]]
    inner = M[b0][J[c, np.arange(N)[:, None]]]  # b0 * (c + b1)
    rhs = J[a0][inner]
    return ~leq[p, rhs]


def is_arguesian(L, mode="auto", samples=100_000, seed=0):
    """The 6-variable Arguesian inequality.

    With p = (a0+b0)(a1+b1)(a2+b2) and c_i = (a_j+a_k)(b_j+b_k) for
    {i,j,k} = {0,1,2}, checks p <= a0 + b0*(c + b1) where c = c2*(c0+c1).
    Exhaustive below the size cap; seeded random sampling above.
    """
    N = L.size
    if mode == "auto":
        mode = "exhaustive" if N <= ARGUESIAN_EXHAUSTIVE_CAP else "sampled"
    if mode == "exhaustive":
        if N > ARGUESIAN_EXHAUSTIVE_CAP and N ** 6 > eval_budget(N_DIST_BUDGET):
            raise BudgetExceeded(
                f"{N}^6 assignments exceed the exhaustive Arguesian budget")
        evals = 0
        for a0 in range(N):
            for a1 in range(N):
                for a2 in range(N):
                    for b0 in range(N):
                        viol = _arguesian_block(L, a0, a1, a2, b0)
                        evals += N * N
                        if viol.any():
                            b1, b2 = (int(v) for v in
                                      np.argwhere(viol)[0])
                            cx = {"a0": a0, "a1": a1, "a2": a2,
                                  "b0": b0, "b1": b1, "b2": b2}
                            return IdentityReport("arguesian", False, cx, evals)
        return IdentityReport("arguesian", True, None, evals)
    rng = random.Random(seed)
    M, J, leq = L.meet_table, L.join_table, L.leq
    for k in range(samples):
        a0, a1, a2, b0, b1, b2 = (rng.randrange(N) for _ in range(6))
        p = M[M[J[a0, b0], J[a1, b1]], J[a2, b2]]
        c0 = M[J[a1, a2], J[b1, b2]]
        c1 = M[J[a0, a2], J[b0, b2]]
        c2 = M[J[a0, a1], J[b0, b1]]
        c = M[c2, J[c0, c1]]
        rhs = J[a0, M[b0, J[c, b1]]]
        if not leq[p, rhs]:
            cx = {"a0": a0, "a1": a1, "a2": a2, "b0": b0, "b1": b1, "b2": b2}
            return IdentityReport("arguesian", False, cx, k + 1,
                                  exhaustive=False)
    return IdentityReport("arguesian", True, None, samples, exhaustive=False)


@dataclass(frozen=True)
class Congruence:
    lattice: FiniteLattice
    block: tuple  # element index -> block id, block id = smallest member

    @property
    def block_count(self):
        return len(set(self.block))

    def related(self, x, y):
        return self.block[x] == self.block[y]

    def blocks(self):
        out = {}
        for i, b in enumerate(self.block):
            out.setdefault(b, []).append(i)
        return [out[b] for b in sorted(out)]


def _canonical_blocks(parent):
    """Union-find parents -> canonical block array."""
    n = len(parent)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    rep = {}
    block = [0] * n
    for i in range(n):
        r = find(i)
        if r not in rep:
            rep[r] = i  # first-seen member is the smallest
        block[i] = rep[r]
    return tuple(block)


def principal_congruence(L, x, y):
    """Least congruence collapsing x and y, by worklist closure."""
    L._check_index(x)
    L._check_index(y)
    n = L.size
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    work = []

    def merge(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
            work.append((a, b))

    M, J = L.meet_table, L.join_table
    merge(x, y)
    while work:
        u, v = work.pop()
        for z in range(n):
            merge(int(M[u, z]), int(M[v, z]))
            merge(int(J[u, z]), int(J[v, z]))
    return Congruence(L, _canonical_blocks(parent))


def is_simple(L):
    """True iff every cover collapse generates the one-block congruence."""
    if L.size < 2:
        raise TrivialLattice("simplicity needs at least two elements")
    for lo, hi in L.covers:
        if principal_congruence(L, lo, hi).block_count != 1:
            return False
    return True


def _join_blocks(n, ba, bb):
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for blk in (ba, bb):
        for i in range(n):
            union(i, blk[i])
    return _canonical_blocks(parent)


def congruence_lattice(L):
    """All congruences of L, ordered by refinement, as a FiniteLattice.

    Generated as the join closure of the cover principal congruences; the
    join of two congruences is the transitive closure of their union.
    """
    n = L.size
    identity = tuple(range(n))
    gens = {principal_congruence(L, lo, hi).block for lo, hi in L.covers}
    cons = {identity} | gens
    frontier = set(cons)
    while frontier:
        new = set()
        for a in frontier:
            for b in cons:
                j = _join_blocks(n, a, b)
                if j not in cons and j not in new:
                    new.add(j)
        cons |= new
        frontier = new
        if len(cons) > CONGRUENCE_COUNT_CAP:
            raise SizeGuardExceeded(
                f"more than {CONGRUENCE_COUNT_CAP} congruences")
    # Finer congruences have more blocks; sort coarse-last for a linear extension.
    ordered = sorted(cons, key=lambda b: (-len(set(b)), b))
    k = len(ordered)
    leq_mat = np.zeros((k, k), dtype=bool)
    for i, a in enumerate(ordered):
        for j, b in enumerate(ordered):
            # a refines b iff every a-class sits inside a b-class.
            leq_mat[i, j] = all(b[p] == b[a[p]] for p in range(n))
    labels = ["|".join(" ".join(str(p) for p in blk)
                       for blk in Congruence(L, b).blocks())
              for b in ordered]
    return _from_leq(leq_mat, labels, f"Con({L.name})")
