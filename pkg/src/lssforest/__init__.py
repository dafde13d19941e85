"""Irreducible decomposition of orthogonal representation varieties of forests.

For a forest G and d >= 3 this package enumerates the irreducible components
of the variety of orthogonal representations (equivalently, the minimal
primes of the LSS ideal L_G(d)), computes their dimensions and the paving
matroid M(G), builds generators of the substitution-closure ideals, and
certifies all of it with exact rational sampling.
"""

__version__ = "0.1.0"

from .graph import Forest, parse_forest, neighborhood, induced_subgraph, peeling_order, serialize
from .matroid import PavingMatroid, matroid_of_forest, paving_rank, realized_matroid_equals
from .linalg import RationalMatrix, vector_rank
from .decomposition import (
    ComponentReport,
    DecompositionResult,
    is_admissible,
    is_admissible_rank,
    enumerate_admissible,
    component_dimension,
    star_oracle,
    caterpillar_oracle,
    binary_tree_oracle,
)
from .poly import Polynomial
from .ideal import (
    GeneratorSet,
    ComponentIdeal,
    edge_generators,
    signed_minors,
    substitute_row,
    ideal_closure,
    component_ideal,
    export,
)
from .verify import (
    SampleConfig,
    sample_UG,
    sample_VS,
    check_orthogonality,
    check_faithful,
    jacobian_dimension_check,
    degeneration_test,
    irredundancy_test,
    vanishing_test,
)

__all__ = [
    "Forest", "parse_forest", "neighborhood", "induced_subgraph", "peeling_order", "serialize",
    "PavingMatroid", "matroid_of_forest", "paving_rank", "realized_matroid_equals",
    "RationalMatrix", "vector_rank",
    "ComponentReport", "DecompositionResult", "is_admissible", "is_admissible_rank",
    "enumerate_admissible", "component_dimension", "star_oracle", "caterpillar_oracle",
    "binary_tree_oracle",
    "Polynomial",
    "GeneratorSet", "ComponentIdeal", "edge_generators", "signed_minors", "substitute_row",
    "ideal_closure", "component_ideal", "export",
    "SampleConfig", "sample_UG", "sample_VS", "check_orthogonality", "check_faithful",
    "jacobian_dimension_check", "degeneration_test", "irredundancy_test", "vanishing_test",
]
