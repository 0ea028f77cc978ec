"""Serialization: lattice JSON, representation JSON, and DOT export.

The lattice JSON document is byte-exact: keys sorted, elements listed in a
linear extension, covers sorted lexicographically, UTF-8 with a single
trailing newline and no trailing whitespace.
"""

from __future__ import annotations

import json

from .core import FiniteLattice, from_covers, heights
from .errors import LatLabError
from .representations import EquivalenceRelation, Representation


def lattice_to_json(L):
    doc = {
        "name": L.name,
        "elements": list(L.labels),
        "covers": [list(c) for c in L.covers],
    }
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def lattice_from_json(text):
    doc = json.loads(text)
    elements = doc["elements"]
    covers = [tuple(c) for c in doc["covers"]]
    for lo, hi in covers:
        if not lo < hi:
            raise LatLabError("covers must respect the linear extension")
    return from_covers(len(elements), covers, labels=elements,
                       name=doc.get("name", "lattice"))


def save_lattice(L, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(lattice_to_json(L))


def load_lattice(path):
    with open(path, encoding="utf-8") as fh:
        return lattice_from_json(fh.read())


def representation_to_json(rep):
    doc = {
        "points": rep.points,
        "n": rep.degree,
        "eps": {str(i): list(rel.block) for i, rel in enumerate(rep.eps)},
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def representation_from_json(text, lattice):
    doc = json.loads(text)
    points = doc["points"]
    eps = []
    for i in range(lattice.size):
        block = doc["eps"][str(i)]
        groups = {}
        for p, b in enumerate(block):
            groups.setdefault(b, []).append(p)
        eps.append(EquivalenceRelation.from_groups(points, groups.values()))
    return Representation(lattice, points, tuple(eps), doc["n"])


def load_representation(path, lattice):
    with open(path, encoding="utf-8") as fh:
        return representation_from_json(fh.read(), lattice)


def to_dot(L):
    """Hasse diagram in DOT: one node per element, one edge per cover,
    elements of equal height share a rank."""
    h = heights(L)
    lines = [f'graph "{L.name}" {{', "  rankdir=BT;", "  node [shape=plaintext];"]
    for i in range(L.size):
        lines.append(f'  n{i} [label="{L.labels[i]}"];')
    for lo, hi in L.covers:
        lines.append(f"  n{lo} -- n{hi};")
    for level in range(max(h) + 1):
        members = [i for i in range(L.size) if h[i] == level]
        if members:
            lines.append("  { rank=same; " + " ".join(f"n{i};" for i in members) + " }")
    lines.append("}")
    return "\n".join(lines) + "\n"
