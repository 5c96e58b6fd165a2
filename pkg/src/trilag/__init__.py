"""Exact-arithmetic toolkit for 3-graph Lagrangian bounds.

Constructions and checkers (graphs), exact Lagrangians (lagrangian),
symmetrization merges (reduction), simplex maximization of the complete
graph closed form (simplex), and a rigorous branch-and-bound positivity
certificate for the final trivariate inequality (certify).
"""

from .graphs import (
    OrientedGraph,
    UndirectedGraph,
    TripleSystem,
    build_f,
    build_cf,
    build_bf,
    underlying,
    edge_density,
    has_induced_directed_c4,
    has_independent_4set,
    complete_graph,
)
from .lagrangian import (
    WeightVector,
    LagrangianValue,
    DensityReport,
    lagrangian_cf,
    lagrangian_bf,
    uniform_weights,
    density_from_uniform,
)
from .reduction import (
    WeightedGraph,
    MergeStep,
    neighbor_sums,
    merge,
    merge_identity_check,
    reduce_to_complete,
)
from .simplex import (
    ClosedFormInput,
    OptResult,
    closed_form,
    closed_form_matches_definition,
    gradient,
    maximize,
    project_to_simplex,
    trivariate_g,
    majorization_bound_check,
)
from .polynomials import Poly3, g_polynomial, h_polynomial
from .certify import (
    Cell,
    Certificate,
    Excision,
    certify,
    check_point_exact,
    expand_h,
    interval_lower_bound,
    bernstein_lower_bound,
)
from .harness import (
    EnumerationReport,
    enumerate_orientations,
    validate_fdf_family,
    pipeline_report,
    run_pipeline,
)
from .fileio import ParseError, parse_graph, parse_weights

__version__ = "0.1.0"
