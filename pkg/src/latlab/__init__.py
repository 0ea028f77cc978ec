"""Finite lattice computations: builders, Hall-Dilworth gluing, identity
checking, projectivity distances, and representations by equivalence
relations."""

from .builders import boolean, chain, m3, n5, partition_lattice, subspace_lattice
from .core import (
    FiniteLattice,
    direct_product,
    dual,
    find_embedding,
    from_covers,
    generated_sublattice,
    interval,
    join,
    length,
    leq,
    meet,
    sublattice,
    width,
)
from .gluing import GluingSpec, Snake, glue, m_lattice, snake
from .identities import (
    Congruence,
    IdentityReport,
    congruence_lattice,
    is_arguesian,
    is_distributive,
    is_modular,
    is_n_distributive,
    is_simple,
    principal_congruence,
)
from .quotients import (
    UNREACHABLE,
    Quotient,
    prime_quotients,
    projectivity_distance,
    transposes_up,
)
from .representations import (
    BinaryRelation,
    EquivalenceRelation,
    Representation,
    intersect,
    join_partition,
    product_representation,
    rel_product_n,
    restrict_representation,
    search_representation,
    verify_representation,
)

__version__ = "0.1.0"
