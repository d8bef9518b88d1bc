"""Exact distinguishing polynomials of finite simple graphs.

The distinguishing polynomial counts vertex colorings with at most k colours
that no non-identity automorphism preserves.  This package computes it by
brute-force enumeration (``oracle``) and by explicit formulas for paths,
cycles, complete and complete multipartite graphs, stars, and disjoint
unions (``closed_forms``), and checks the two against each other.
"""

from .analysis import similar, similarity_class_size, verify_multiplicity_theorem
from .automorphism import (
    AutGroup,
    automorphisms,
    dihedral_elements,
    has_color_preserving_automorphism,
    is_isomorphic,
    orbits,
    stabilizer,
    supports,
    vertex_orbits,
)
from .closed_forms import (
    complete_multipartite_poly,
    complete_poly,
    compute_dist_poly,
    cycle_poly,
    disjoint_union_poly,
    path_poly,
    star_poly,
)
from .errors import (
    BudgetExceeded,
    CountingError,
    GroupTooLarge,
    ParseError,
    ResourceError,
)
from .graph import Graph, complement, connected_components, parse_edge_list, parse_graph6
from .oracle import count_distinguishing, dist_poly_oracle, distinguishing_number
from .polynomial import IntPoly, RatPoly, falling_factorial, interpolate, zero_multiplicity

__version__ = "0.1.0"
