"""Tiled orders over a discrete valuation ring, given by exponent matrices.

Computes link graphs and valued quivers, enumerates quiver automorphisms,
decides which of them lift to automorphisms of the order (with explicit
monomial-matrix lifts), assembles the finite lift group, and tests two
orders for conjugacy.
"""

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    LengthMismatch,
    MalformedSyntax,
    NegativeEntry,
    NonzeroDiagonal,
    NotQuiverAutomorphism,
    NotSquare,
    OutOfRange,
    RepeatedElement,
    TiledOrderError,
    TooLarge,
    TriangleViolation,
)
from .exponent import (
    ExponentMatrix,
    LatticeMatrix,
    conjugate,
    hereditary_order,
    intersect,
    is_basic,
    is_zero_one,
    maximal_ideal,
    minplus_product,
    radical,
    validate,
)
from .lifting import (
    SEMIDIRECT_STRUCTURE,
    LiftableGroup,
    LiftVector,
    MonomialLift,
    StructureReport,
    aut_structure_report,
    compose_lifts,
    first_inconsistent_pair,
    invert_lift,
    is_liftable,
    lift_matrix,
    liftable_subgroup,
    orders_isomorphic,
    preserves_valuation,
    solve_lift_system,
)
from .perm import (
    Perm,
    compose,
    is_automorphism,
    parse_perm,
    quiver_automorphisms,
    quiver_automorphisms_naive,
)
from .quiver import Quiver, ValuedQuiver, link_graph, link_graph_via_radical, valued_quiver

__version__ = "0.1.0"
