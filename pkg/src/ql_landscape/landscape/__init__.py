from .classify import classify_point, negative_curvature_search, null_space, rank_of
from .example1 import EXAMPLE1, example1_point, make_example1, perturbation_probe
from .point_class import (
    GLOBAL_MIN,
    NEGATIVE_CURVATURE,
    NOT_STATIONARY,
    SEMIDEFINITE_RESIDUAL_NON_GLOBAL,
    TAGS,
    UNRESOLVED,
    PointClass,
    Tolerances,
)

__all__ = [
    "classify_point",
    "EXAMPLE1",
    "example1_point",
    "GLOBAL_MIN",
    "make_example1",
    "NEGATIVE_CURVATURE",
    "negative_curvature_search",
    "NOT_STATIONARY",
    "null_space",
    "perturbation_probe",
    "PointClass",
    "rank_of",
    "SEMIDEFINITE_RESIDUAL_NON_GLOBAL",
    "TAGS",
    "Tolerances",
    "UNRESOLVED",
]
