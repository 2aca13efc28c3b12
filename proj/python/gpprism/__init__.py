"""General position numbers of graphs and their complementary prisms."""

from ._gpprism import (
    Graph,
    GpprismError,
    complement,
    complementary_prism,
    compute,
    family,
    invariants,
    is_complete_multipartite,
    max_gp,
    max_gp3,
    parse_graph,
    prism_bounds,
    prism_gp,
    theorem_ids,
    verify,
)

__all__ = [
    "Graph",
    "GpprismError",
    "complement",
    "complementary_prism",
    "compute",
    "family",
    "invariants",
    "is_complete_multipartite",
    "max_gp",
    "max_gp3",
    "parse_graph",
    "prism_bounds",
    "prism_gp",
    "theorem_ids",
    "verify",
]
