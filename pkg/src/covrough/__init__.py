"""Covering rough sets based on neighborhoods over finite universes."""

from covrough.approximation import (
    SubcoveringFamily,
    lower,
    neighborhood,
    neighborhood_table,
    subcoverings,
    upper,
    upper_def3,
    upper_neigh,
    upper_subcov,
    upper_subcov_nontrivial,
)
from covrough.core import (
    ApproxSpace,
    Covering,
    Subset,
    Universe,
    complement,
    difference,
    intersect,
    is_empty,
    is_subset,
    make_covering,
    make_universe,
    members,
    union,
)
from covrough.enumeration import count_coverings, enumerate_coverings, random_covering
from covrough.morphisms import (
    HomMode,
    Mapping,
    image,
    is_homomorphism,
    is_isomorphism,
    preimage,
    preservation_report,
)
from covrough.ops import (
    OperatorTag,
    definable_closure,
    int_op,
    is_irreducible,
    is_non_intersectional,
    join_op,
    meet_op,
    nei_op,
    reduct,
    same_lower_operator,
    same_upper_operator,
)

__version__ = "0.1.0"
