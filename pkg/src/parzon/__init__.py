"""Zonotopal parallelohedra: closed-form quermassintegrals, five-type
classification, isotropic-position weight recovery, and mean-width
minimization at unit volume.

Bodies are handled in two interchangeable forms: a raw generator list
(any zonotope), and the pair representation built from a normalized
centered tetrahedron with six nonnegative edge weights, which covers
exactly the five combinatorial types of space-filling polytopes.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from ._kernels import available_backends, backend_name
from .errors import DegenerateBodyError, NoFeasibleStartError, ParzonError, SchemaError
from .geom import Matrix3, Vector3, cross, cross_det_identity, det3, gram
from .isotropy import (
    BoundChainResult,
    ReductionQuantities,
    beta_from_isotropy,
    bound_chain,
    isotropy_matrix,
    projection_body_facets,
    reduction_quantities,
    regular_tetrahedron,
)
from .optimizer import (
    KNOWN_MIN_WIDTH,
    OPTIMUM_KNOWN,
    TYPE4_WIDTH_LOWER_BOUND,
    TYPE_ZERO_SLOTS,
    OptimConfig,
    OptimResult,
    TableRow,
    minimize_mean_width,
    minimize_width_isotropic_fastpath,
    numeric_simplex_max,
    width_table,
)
from .parallelohedron import (
    TYPE_BELT_COUNTS,
    TYPE_FACE_COUNTS,
    TYPE_NAMES,
    BetaWeights,
    CenteredTetrahedron,
    ParallelohedronType,
    belts,
    body_from_json,
    build,
    classify,
    measures_rep,
    normalize_tetrahedron,
)
from .verify import SUITES, AssertionReport, SweepReport, run_suite
from .volume_form import (
    COMPLEMENT_SLOT,
    PAIRS,
    PairVector,
    SimplexCase,
    SimplexMaxResult,
    TetrahedronIdentities,
    simplex_max,
    tetrahedron_identities,
    volume_form,
    volume_form_expanded,
    volume_form_grad,
)
from .zonotope import (
    PolyMesh,
    QuermassReport,
    Zonotope,
    facet_normals,
    inradius,
    mean_width,
    measures,
    mesh_surface_area,
    mesh_volume,
    realize_hull,
    second_quermass,
    support,
    surface_area,
    to_off,
    volume,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "KERNEL_BACKEND",
    "available_backends",
    "backend_name",
    "ParzonError",
    "SchemaError",
    "DegenerateBodyError",
    "NoFeasibleStartError",
    "Vector3",
    "Matrix3",
    "det3",
    "cross",
    "gram",
    "cross_det_identity",
    "PAIRS",
    "COMPLEMENT_SLOT",
    "PairVector",
    "SimplexCase",
    "SimplexMaxResult",
    "TetrahedronIdentities",
    "volume_form",
    "volume_form_expanded",
    "volume_form_grad",
    "simplex_max",
    "tetrahedron_identities",
    "Zonotope",
    "QuermassReport",
    "PolyMesh",
    "volume",
    "surface_area",
    "mean_width",
    "second_quermass",
    "support",
    "facet_normals",
    "inradius",
    "measures",
    "realize_hull",
    "mesh_volume",
    "mesh_surface_area",
    "to_off",
    "CenteredTetrahedron",
    "BetaWeights",
    "ParallelohedronType",
    "TYPE_NAMES",
    "TYPE_FACE_COUNTS",
    "TYPE_BELT_COUNTS",
    "normalize_tetrahedron",
    "build",
    "classify",
    "belts",
    "measures_rep",
    "body_from_json",
    "ReductionQuantities",
    "BoundChainResult",
    "reduction_quantities",
    "isotropy_matrix",
    "beta_from_isotropy",
    "bound_chain",
    "regular_tetrahedron",
    "projection_body_facets",
    "OptimConfig",
    "OptimResult",
    "TableRow",
    "TYPE_ZERO_SLOTS",
    "KNOWN_MIN_WIDTH",
    "OPTIMUM_KNOWN",
    "TYPE4_WIDTH_LOWER_BOUND",
    "minimize_mean_width",
    "minimize_width_isotropic_fastpath",
    "numeric_simplex_max",
    "width_table",
    "SUITES",
    "AssertionReport",
    "SweepReport",
    "run_suite",
]
