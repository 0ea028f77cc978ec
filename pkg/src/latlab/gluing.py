"""Hall-Dilworth gluing, the snake sequence, and the two-sided glued lattices.

Gluing identifies a filter of the lower lattice with an ideal of the upper
lattice along an order isomorphism.  The cover relation of the result is
exactly the union of the two cover relations (with the ideal elements
renamed), because no element of one part can slip strictly between a
covering pair of the other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .builders import m3, subspace_lattice
from .core import FiniteLattice, _from_covers_with_map
from .errors import BadChoice, BadIso, SamePrime, SizeGuardExceeded

SNAKE_LENGTH_CAP = 50


@dataclass(frozen=True)
class GluingSpec:
    lower: FiniteLattice
    filter_bottom: int
    upper: FiniteLattice
    ideal_top: int
    iso: tuple  # pairs (element of the filter, element of the ideal)


@dataclass(frozen=True)
class GlueResult:
    lattice: FiniteLattice
    map_lower: tuple  # element of lower -> element of the result
    map_upper: tuple


def _validate_iso(spec):
    A, B = spec.lower, spec.upper
    A._check_index(spec.filter_bottom)
    B._check_index(spec.ideal_top)
    filt = [x for x in range(A.size) if A.leq[spec.filter_bottom, x]]
    ideal = [y for y in range(B.size) if B.leq[y, spec.ideal_top]]
    fwd = dict(spec.iso)
    if sorted(fwd) != filt or sorted(set(fwd.values())) != ideal \
            or len(fwd) != len(spec.iso):
        raise BadIso("iso is not a bijection between the filter and the ideal")
    for f1 in filt:
        for f2 in filt:
            if bool(A.leq[f1, f2]) != bool(B.leq[fwd[f1], fwd[f2]]):
                raise BadIso("iso does not preserve order both ways")
    return filt, ideal, fwd


def glue(spec):
    """Glue spec.upper on top of spec.lower over the filter/ideal iso."""
    A, B = spec.lower, spec.upper
    filt, ideal, fwd = _validate_iso(spec)
    inv = {i: f for f, i in fwd.items()}
    n = A.size + B.size - len(filt)
    # Result indices before re-sorting: lower elements keep their index,
    # fresh upper elements are appended.
    b_map = {}
    nxt = A.size
    for y in range(B.size):
        if y in inv:
            b_map[y] = inv[y]
        else:
            b_map[y] = nxt
            nxt += 1
    covers = list(A.covers)
    covers.extend((b_map[lo], b_map[hi]) for lo, hi in B.covers)
    labels = list(A.labels) + [B.labels[y] for y in range(B.size)
                               if y not in inv]
    lat, old2new = _from_covers_with_map(
        n, covers, labels, name=f"glue({A.name},{B.name})")
    map_lower = tuple(old2new[x] for x in range(A.size))
    map_upper = tuple(old2new[b_map[y]] for y in range(B.size))
    return GlueResult(lat, map_lower, map_upper)


@dataclass(frozen=True)
class Snake:
    lattice: FiniteLattice
    spine: tuple            # tops of the M_3 copies, in gluing order
    designated_coatom: int  # the unique coatom lying in the previous snake
    base_atoms: tuple       # images of the atoms of the first copy
    top_copy: tuple         # elements of the last-glued copy


def snake(n):
    """The snake S_n: n glued copies of M_3, length n+1, 3n+2 elements."""
    if not 1 <= n <= SNAKE_LENGTH_CAP:
        raise SizeGuardExceeded(f"snake index must be in 1..{SNAKE_LENGTH_CAP}")
    base = m3()
    # S_1 = M_3 with the designated coatom fixed at r (index 3).
    lat = base.rename("snake:1")
    spine = (lat.top,)
    designated = 3
    base_atoms = (1, 2, 3)
    top_copy = tuple(range(5))
    for k in range(2, n + 1):
        fresh = m3()
        spec = GluingSpec(lat, designated, fresh, 1,
                          ((designated, 0), (lat.top, 1)))
        res = glue(spec)
        new_designated = res.map_lower[lat.top]
        spine = tuple(res.map_lower[s] for s in spine) \
            + (res.map_upper[fresh.top],)
        base_atoms = tuple(res.map_lower[a] for a in base_atoms)
        top_copy = tuple(res.map_upper[y] for y in range(5))
        lat = res.lattice.rename(f"snake:{k}")
        designated = new_designated
    return Snake(lat, spine, designated, base_atoms, top_copy)


def default_anchor_atom(s):
    """First base-copy atom distinct from the designated base coatom."""
    base_designated = s.base_atoms[2]  # r of the first copy
    for a in s.base_atoms:
        if a != base_designated:
            return a
    raise BadChoice("no base atom available")


def default_anchor_coatom(s, avoid):
    """First coatom of the top copy that is off the spine and differs from avoid."""
    coatoms = set(s.lattice.coatoms())
    spine = set(s.spine)
    for c in sorted(set(s.top_copy) & coatoms):
        if c not in spine and c != avoid:
            return c
    raise BadChoice("no off-spine coatom available")


def m_lattice(n, p1, p2, atom_choice=None, coatom_choice=None,
              allow_same_prime=False):
    """Snake S_n with height-3 subspace lattices glued below and above.

    L_1 = L(GF(p1)^3) is glued below over (coatom h of L_1 -> bottom of S_n,
    top of L_1 -> atom a of S_n); L_2 = L(GF(p2)^3) is glued above over
    (coatom c of S_n -> bottom of L_2, top of S_n -> atom p of L_2).
    """
    if p1 == p2 and not allow_same_prime:
        raise SamePrime("the construction expects distinct primes "
                        "(pass allow_same_prime to override)")
    s = snake(n)
    sn = s.lattice
    a = default_anchor_atom(s) if atom_choice is None else atom_choice
    if a not in sn.atoms():
        raise BadChoice(f"element {a} is not an atom of the snake")
    c = default_anchor_coatom(s, a) if coatom_choice is None else coatom_choice
    if c not in sn.coatoms():
        raise BadChoice(f"element {c} is not a coatom of the snake")

    l1 = subspace_lattice(p1, 3)
    h = l1.coatoms()[0]
    lower = glue(GluingSpec(l1, h, sn, a, ((h, sn.bottom), (l1.top, a))))
    mid = lower.lattice
    c_mid = lower.map_upper[c]
    top_mid = lower.map_upper[sn.top]

    l2 = subspace_lattice(p2, 3)
    p = l2.atoms()[0]
    upper = glue(GluingSpec(mid, c_mid, l2, p, ((c_mid, l2.bottom), (top_mid, p))))
    return upper.lattice.rename(f"mlat:{n}:{p1}:{p2}")
