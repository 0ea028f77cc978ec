"""Prime quotients, transposition, and projectivity distance."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import FiniteLattice
from .errors import ParentMismatch


@dataclass(frozen=True)
class Quotient:
    lattice: FiniteLattice
    top: int
    bottom: int

    def __post_init__(self):
        self.lattice._check_index(self.top)
        self.lattice._check_index(self.bottom)
        if not self.lattice.leq[self.bottom, self.top]:
            raise ValueError(f"{self.bottom} is not below {self.top}")

    def label(self):
        return f"{self.top}/{self.bottom}"

    def key(self):
        return (self.bottom, self.top)


def is_prime(q):
    return (q.bottom, q.top) in set(q.lattice.covers)


def prime_quotients(L):
    """One quotient per cover pair, in lexicographic (bottom, top) order."""
    return [Quotient(L, hi, lo) for lo, hi in L.covers]


def transposes_up(q, r):
    """q = a/b transposes up to r = c/d when c = a + d and b = a * d."""
    if q.lattice is not r.lattice:
        raise ParentMismatch("quotients live in different lattices")
    L = q.lattice
    return (r.top == L.join(q.top, r.bottom)
            and q.bottom == L.meet(q.top, r.bottom))


UNREACHABLE = "unreachable"


def _prime_graph(L):
    nodes = prime_quotients(L)
    index = {q.key(): i for i, q in enumerate(nodes)}
    adj = [[] for _ in nodes]
    for i, q in enumerate(nodes):
        for j, r in enumerate(nodes):
            if i != j and (transposes_up(q, r) or transposes_up(r, q)):
                adj[i].append(j)
    return nodes, index, adj


def projectivity_distance(L, q, r, with_path=False):
    """BFS distance between prime quotients, counting single transposes.

    Returns the step count, or UNREACHABLE when the quotients are not
    projective within the prime-quotient graph.  With with_path, also
    returns the canonical witness chain of quotients.
    """
    if q.lattice is not L or r.lattice is not L:
        raise ParentMismatch("quotients do not belong to the given lattice")
    if not is_prime(q) or not is_prime(r):
        raise ValueError("projectivity distance is defined on prime quotients")
    nodes, index, adj = _prime_graph(L)
    src, dst = index[q.key()], index[r.key()]
    prev = {src: None}
    dist = {src: 0}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            break
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                prev[w] = v
                queue.append(w)
    if dst not in dist:
        return (UNREACHABLE, None) if with_path else UNREACHABLE
    if not with_path:
        return dist[dst]
    path = []
    v = dst
    while v is not None:
        path.append(nodes[v])
        v = prev[v]
    return dist[dst], path[::-1]


def all_pairs_projectivity(L):
    """Distance matrix over the prime quotients (BFS from every node)."""
    nodes, _, adj = _prime_graph(L)
    k = len(nodes)
    out = [[UNREACHABLE] * k for _ in range(k)]
    for s in range(k):
        out[s][s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if out[s][w] == UNREACHABLE:
                    out[s][w] = out[s][v] + 1
                    queue.append(w)
    return nodes, out
