"""Exact walk matrices of rooted products ``G o P_m`` and the identities behind
``det W(G o P_m) = +-a0^(m//2) * det W(G)^m``."""
from .exact_linalg import charpoly, det_bareiss, kronecker, mat_vec
from .graphs import (
    Graph,
    Graph6Error,
    a0,
    complement,
    graph6_decode,
    graph6_encode,
    path_graph,
    rooted_product_path,
    walk_det,
    walk_matrix,
)
from .polynomials import IntPoly, chebyshev_s, chebyshev_u, resultant, s_sum

__version__ = "0.1.0"
