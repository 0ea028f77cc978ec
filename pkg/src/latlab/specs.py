"""Builder spec strings: m3 | n5 | chain:<k> | boolean:<k> | pi:<k> |
subspace:<p>:<d> | snake:<n> | mlat:<n>:<p1>:<p2>."""

from __future__ import annotations

from . import builders, gluing


class BadSpec(ValueError):
    pass


def build_from_spec(spec):
    head, *args = spec.split(":")
    try:
        ints = [int(a) for a in args]
    except ValueError as exc:
        raise BadSpec(f"non-integer argument in {spec!r}") from exc
    arity = {"m3": 0, "n5": 0, "chain": 1, "boolean": 1, "pi": 1,
             "subspace": 2, "snake": 1, "mlat": 3}
    if head not in arity:
        raise BadSpec(f"unknown builder {head!r}")
    if len(ints) != arity[head]:
        raise BadSpec(f"{head} expects {arity[head]} argument(s)")
    if head == "m3":
        return builders.m3()
    if head == "n5":
        return builders.n5()
    if head == "chain":
        return builders.chain(ints[0])
    if head == "boolean":
        return builders.boolean(ints[0])
    if head == "pi":
        return builders.partition_lattice(ints[0])
    if head == "subspace":
        return builders.subspace_lattice(ints[0], ints[1])
    if head == "snake":
        return gluing.snake(ints[0]).lattice
    return gluing.m_lattice(ints[0], ints[1], ints[2])
