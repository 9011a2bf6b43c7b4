"""Finite incidence geometry toolkit: pair Grassmannians, geometric
hyperplanes, Veldkamp spaces and their polar subgeometries."""

from .grassmannian import build_g2, named_configuration
from .hyperplanes import (
    Hyperplane,
    all_bipartition_hyperplanes,
    bipartition_hyperplane,
    enumerate_hyperplanes,
    enumerate_hyperplanes_scan,
    is_hyperplane,
)
from .incidence import (
    CollinearityGraph,
    ConfigurationParameters,
    GQCheck,
    IncidenceStructure,
    SRGParameters,
    StructureError,
    check_gq,
    check_one_or_all,
    check_projective,
    collinearity_graph,
    configuration_parameters,
    new_structure,
    srg_parameters,
)
from .magic_line import (
    MagicLineDecomposition,
    build_magic_line,
    verify_cone,
    verify_core,
    verify_counts,
    verify_elliptic,
    verify_hyperbolic,
    verify_veldkamp_line_of_w,
)
from .polar import (
    PolarKind,
    PolarSubspace,
    alpha_quadric,
    conwell_heptad,
    embedded_grassmannian,
    extract_symplectic,
    quadric_point_count,
)
from .veldkamp_space import (
    PointType,
    VeldkampSpace,
    build_veldkamp,
    classify_line,
    classify_point,
    tabulate_census,
    third_point,
)
from .verification import verify_all

__all__ = [
    "CollinearityGraph",
    "ConfigurationParameters",
    "GQCheck",
    "Hyperplane",
    "IncidenceStructure",
    "MagicLineDecomposition",
    "PointType",
    "PolarKind",
    "PolarSubspace",
    "SRGParameters",
    "StructureError",
    "VeldkampSpace",
    "all_bipartition_hyperplanes",
    "alpha_quadric",
    "bipartition_hyperplane",
    "build_g2",
    "build_magic_line",
    "build_veldkamp",
    "check_gq",
    "check_one_or_all",
    "check_projective",
    "classify_line",
    "classify_point",
    "collinearity_graph",
    "configuration_parameters",
    "conwell_heptad",
    "embedded_grassmannian",
    "enumerate_hyperplanes",
    "enumerate_hyperplanes_scan",
    "extract_symplectic",
    "is_hyperplane",
    "named_configuration",
    "new_structure",
    "quadric_point_count",
    "srg_parameters",
    "tabulate_census",
    "third_point",
    "verify_all",
    "verify_cone",
    "verify_core",
    "verify_counts",
    "verify_elliptic",
    "verify_hyperbolic",
    "verify_veldkamp_line_of_w",
]

__version__ = "0.1.0"
