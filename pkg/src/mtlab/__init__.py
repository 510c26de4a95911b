"""Exact computations with ideal lattices of finite commutative rings.

The ideals of a finite commutative ring, under intersection, sum, product
and residuum, form a residuated lattice.  This package enumerates that
lattice, decides which identities it satisfies (MTL, BL, MV, Goedel,
distributivity), and checks ring-level facts about MTL-rings on finite
examples.
"""

from .algebra import (AlgebraFlags, ResLattice, check_axioms, check_basic_properties,
                      derived_ops, from_ideal_lattice, nm_chain)
from .classify import (Classification, check_arithmetical, check_bl,
                       check_equivalent_conditions, check_godel,
                       check_localizations_chain, check_mtl, check_mv, classify_ring,
                       localize)
from .ideals import (Ideal, IdealLattice, build_quotient, enumerate_ideals, generated_ideal,
                     ideal_intersect, ideal_product, ideal_sum, maximal_ideals, radical,
                     residuum, structure_queries, to_dot)
from .iso import ring_isomorphic
from .ring import (FiniteRing, RingMap, build_from_tables, build_null_extension,
                   build_product, build_zn, check_star, find_identity)
from .verify import (bezout_pair, crt_check, subdirect_decompose, suite_general_identities,
                     suite_mtl_identities, suite_quotient_lemma)

__version__ = "0.1.0"

__all__ = [
    "AlgebraFlags",
    "Classification",
    "FiniteRing",
    "Ideal",
    "IdealLattice",
    "ResLattice",
    "RingMap",
    "bezout_pair",
    "build_from_tables",
    "build_null_extension",
    "build_product",
    "build_quotient",
    "build_zn",
    "check_arithmetical",
    "check_axioms",
    "check_basic_properties",
    "check_bl",
    "check_equivalent_conditions",
    "check_godel",
    "check_localizations_chain",
    "check_mtl",
    "check_mv",
    "check_star",
    "classify_ring",
    "crt_check",
    "derived_ops",
    "enumerate_ideals",
    "find_identity",
    "from_ideal_lattice",
    "generated_ideal",
    "ideal_intersect",
    "ideal_product",
    "ideal_sum",
    "localize",
    "maximal_ideals",
    "nm_chain",
    "radical",
    "residuum",
    "ring_isomorphic",
    "structure_queries",
    "subdirect_decompose",
    "suite_general_identities",
    "suite_mtl_identities",
    "suite_quotient_lemma",
    "to_dot",
]
