"""Exact lattice-polytope computations for Chow semistability of toric manifolds.

All arithmetic is exact (arbitrary-precision integers and rationals); the
package has no runtime dependencies outside the standard library.
"""

from .delzant import DelzantVerdict, is_delzant, is_reflexive
from .ehrhart import (
    EhrhartPolynomial,
    SumPolynomial,
    ehrhart_polynomial,
    polygon_closed_forms,
    reciprocity_check,
    sum_polynomial,
    validate,
)
from .errors import (
    AffineGenerationError,
    ChowstabError,
    DegenerateInputError,
    DimensionMismatchError,
    InternalConsistencyError,
    NonDelzantError,
)
from .generators import (
    cross,
    cube,
    generate,
    hirzebruch,
    nill_paffenholz,
    segment,
    simplex,
)
from .git_weights import (
    AffineHull,
    DiagonalResult,
    WeightSet,
    chow_weight_affine_hull,
    diagonal_in_affine_hull,
    is_torus_semistable,
    project_to_subtorus,
)
from .hilbert import (
    HilbertTruncation,
    SeriesCheck,
    cone_slice,
    derivative_series,
    semistable_series_check,
)
from .lattice_points import DilationData, count_and_sum, enumerate_points
from .measure import MeasureData, measure_data, moment, simplex_volume, volume
from .obstruction import (
    CHOW_UNSTABLE_AT,
    OBSTRUCTION_VANISHES,
    REFLEXIVE_SEMISTABLE,
    REFLEXIVE_UNSTABLE,
    ObstructionReport,
    check_point_configuration,
    obstruction_vectors,
    residual_at,
    verdict,
)
from .polytope import (
    Halfspace,
    HalfspaceRep,
    LatticePolytope,
    Simplex,
    contains,
    dilate,
    hrep_to_vrep,
    translate,
    triangulate,
    vertex_edge_directions,
    vrep_to_hrep,
)

__version__ = "0.1.0"

__all__ = [
    "AffineGenerationError",
    "AffineHull",
    "CHOW_UNSTABLE_AT",
    "ChowstabError",
    "DegenerateInputError",
    "DelzantVerdict",
    "DiagonalResult",
    "DilationData",
    "DimensionMismatchError",
    "EhrhartPolynomial",
    "Halfspace",
    "HalfspaceRep",
    "HilbertTruncation",
    "InternalConsistencyError",
    "LatticePolytope",
    "MeasureData",
    "NonDelzantError",
    "OBSTRUCTION_VANISHES",
    "ObstructionReport",
    "REFLEXIVE_SEMISTABLE",
    "REFLEXIVE_UNSTABLE",
    "SeriesCheck",
    "Simplex",
    "SumPolynomial",
    "WeightSet",
    "check_point_configuration",
    "chow_weight_affine_hull",
    "cone_slice",
    "contains",
    "count_and_sum",
    "cross",
    "cube",
    "derivative_series",
    "diagonal_in_affine_hull",
    "dilate",
    "ehrhart_polynomial",
    "enumerate_points",
    "generate",
    "hirzebruch",
    "hrep_to_vrep",
    "is_delzant",
    "is_reflexive",
    "is_torus_semistable",
    "measure_data",
    "moment",
    "nill_paffenholz",
    "obstruction_vectors",
    "polygon_closed_forms",
    "project_to_subtorus",
    "reciprocity_check",
    "residual_at",
    "segment",
    "semistable_series_check",
    "simplex",
    "simplex_volume",
    "sum_polynomial",
    "translate",
    "triangulate",
    "validate",
    "verdict",
    "vertex_edge_directions",
    "volume",
    "vrep_to_hrep",
]
