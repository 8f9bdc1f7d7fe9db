"""Exact Seshadri constants on the seven types of hyperelliptic surfaces.

Thin re-export of the compiled extension. All arithmetic is exact: rationals
cross the boundary as "p/q" strings and irrational bounds as ExactValue
objects of the form q + r*sqrt(d).
"""

from seshadri._core import (
    CrossCheckRow,
    CurveCandidate,
    DivisorClass,
    EstimateKind,
    ExactValue,
    OracleReport,
    Ordering,
    SeshadriEstimate,
    SurfaceType,
    certify_point,
    compare_bounds,
    cross_check_region,
    delta_feasibility,
    epsilon_at_point,
    epsilon_min,
    epsilon_one,
    exc_membership,
    exc_reduced_fraction_count,
    fibre_classes,
    fsst_lower_bound,
    intersect,
    is_ample,
    is_effective_vertical,
    max_feasible_delta,
    pell_fundamental,
    self_intersection,
    surface_params,
    __version__,
)

__all__ = [
    "CrossCheckRow",
    "CurveCandidate",
    "DivisorClass",
    "EstimateKind",
    "ExactValue",
    "OracleReport",
    "Ordering",
    "SeshadriEstimate",
    "SurfaceType",
    "certify_point",
    "compare_bounds",
    "cross_check_region",
    "delta_feasibility",
    "epsilon_at_point",
    "epsilon_min",
    "epsilon_one",
    "exc_membership",
    "exc_reduced_fraction_count",
    "fibre_classes",
    "fsst_lower_bound",
    "intersect",
    "is_ample",
    "is_effective_vertical",
    "max_feasible_delta",
    "pell_fundamental",
    "self_intersection",
    "surface_params",
    "__version__",
]
