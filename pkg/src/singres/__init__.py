"""Exact resolution of plane curve singularities and of surface germs z^n + f(x, y).

Everything is computed over the rationals with exact arithmetic.
"""
from .arith import chain_determinant, hj_evaluate, hj_expand, solve_congruence
from .curveres import (
    CenterNode,
    ResolutionRecord,
    blow_up_branch,
    decode,
    embedded_resolution,
    encode,
)
from .errors import *  # noqa: F401,F403
from .graph import (
    Arrow,
    DualGraph,
    IntersectionMatrix,
    Vertex,
    blow_down_minimize,
    check_balance,
    graph_determinant,
    intersection_matrix,
    is_negative_definite,
)
from .hj import CyclicQuotient, MonomialGerm, cyclic_quotient_resolution, figure7_graph, lemma_reduce
from .jung import (
    CoveringDatum,
    SurfaceGerm,
    cover_of_exceptional,
    jung_pipeline,
    jung_resolve,
    local_quasi_ordinary_data,
)
from .poly import NewtonPolygon, Poly, discriminant_wrt, newton_polygon, parse_poly, resultant
from .puiseux import (
    CurveGerm,
    PuiseuxBranch,
    delta_invariant,
    genus_of_plane_curve,
    intersection_multiplicity,
    multiplicity_sequence,
    puiseux_branches,
)

__version__ = "0.1.0"
