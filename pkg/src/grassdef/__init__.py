"""Secant defectivity bounds, exact jet-rank oracles, Schubert calculus and
blow-up classification for Grassmannians and Segre-Veronese varieties."""

from .bounds import (
    BoundReport,
    aop_bound,
    grass_bound,
    h_m,
    linear_bound,
    osculating_dim_grass,
    osculating_dim_sv,
    sv_bound,
)
from .birational import (
    FANO,
    KNOWN_MDS,
    MDS_UNKNOWN,
    NEITHER,
    WEAK_FANO_ONLY,
    Ambient,
    Chamber,
    ChamberDecomposition,
    ConeData,
    CurveClass,
    DivisorClass,
    FanoReport,
    MDSReport,
    SphericalReport,
    anticanonical,
    classify_fano,
    curve_e,
    curve_h,
    curve_l,
    divisor_E,
    divisor_H,
    effective_cone,
    intersect,
    mds_status,
    mori_chambers_g1n1,
    mori_cone_generators,
    spherical_status,
    top_self_intersection,
)
from .indices import (
    GrassShape,
    SegreVeroneseShape,
    Shape,
    ball,
    delta_set,
    distance,
    enumerate_indices,
    grass_distance,
    sv_distance,
)
from .oracle import (
    CERTIFIED,
    CONSTANT_MAP,
    DEFAULT_PRIME,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    DEFECT_EVIDENCE,
    FIBER_EVIDENCE,
    GENERICALLY_FINITE,
    HYPOTHESIS_VIOLATED,
    CapExceeded,
    DefectivityCertificate,
    JetMatrix,
    LimitHyperplane,
    Parametrization,
    PrimeField,
    ProjectionReport,
    RankAccumulator,
    RationalNormalCurve,
    TangentDevelopable,
    build_parametrization,
    is_probable_prime,
    jet_matrix,
    limit_hyperplane_coeffs,
    osculating_projection_finite,
    osculating_rank_sweep,
    rank,
    secant_dimension,
    tangential_projection_finite,
)
from .schubert import (
    FerrersDiagram,
    Partition,
    complementary,
    contains,
    grass_degree,
    multiplicity,
    rectangle_count,
    schubert_codim,
    schubert_dim,
    singular_locus,
)

__version__ = "0.1.0"

__all__ = [
    "Ambient",
    "BoundReport",
    "CERTIFIED",
    "CONSTANT_MAP",
    "CapExceeded",
    "Chamber",
    "ChamberDecomposition",
    "ConeData",
    "CurveClass",
    "DEFAULT_PRIME",
    "DEFAULT_SEED",
    "DEFAULT_TRIALS",
    "DEFECT_EVIDENCE",
    "DefectivityCertificate",
    "DivisorClass",
    "FANO",
    "FIBER_EVIDENCE",
    "FanoReport",
    "FerrersDiagram",
    "GENERICALLY_FINITE",
    "GrassShape",
    "HYPOTHESIS_VIOLATED",
    "JetMatrix",
    "KNOWN_MDS",
    "LimitHyperplane",
    "MDSReport",
    "MDS_UNKNOWN",
    "NEITHER",
    "Parametrization",
    "Partition",
    "PrimeField",
    "ProjectionReport",
    "RankAccumulator",
    "RationalNormalCurve",
    "SegreVeroneseShape",
    "Shape",
    "SphericalReport",
    "TangentDevelopable",
    "WEAK_FANO_ONLY",
    "anticanonical",
    "aop_bound",
    "ball",
    "build_parametrization",
    "classify_fano",
    "complementary",
    "contains",
    "curve_e",
    "curve_h",
    "curve_l",
    "delta_set",
    "distance",
    "divisor_E",
    "divisor_H",
    "effective_cone",
    "enumerate_indices",
    "grass_bound",
    "grass_degree",
    "grass_distance",
    "h_m",
    "intersect",
    "is_probable_prime",
    "jet_matrix",
    "limit_hyperplane_coeffs",
    "linear_bound",
    "mds_status",
    "mori_chambers_g1n1",
    "mori_cone_generators",
    "multiplicity",
    "osculating_dim_grass",
    "osculating_dim_sv",
    "osculating_projection_finite",
    "osculating_rank_sweep",
    "rank",
    "rectangle_count",
    "schubert_codim",
    "schubert_dim",
    "secant_dimension",
    "singular_locus",
    "spherical_status",
    "sv_bound",
    "sv_distance",
    "tangential_projection_finite",
    "top_self_intersection",
]
