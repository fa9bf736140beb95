"""Planar hedgehogs from trigonometric support functions: preserving sets,
midpoint sets, and isoperimetric-type inequalities."""

from .curvegeom import (
    Hedgehog,
    Point2,
    SingularPoint,
    SteinerDisk,
    algebraic_length,
    average_width,
    convexity_status,
    is_convex,
    isogonal_family,
    oriented_area,
    perp_point_at,
    point_at,
    points_at,
    radius_of_curvature,
    rotate,
    singular_points,
    steiner_disk,
    steiner_point,
    width,
)
from .errors import DomainError, HedgehogError, InputError, InvalidParameterError, NumericalError
from .fourier import (
    TrigPoly,
    directional_average,
    evaluate,
    filter_indices,
    generalized_k_width,
    l2_norm_squared,
    phase_shift,
    t_k_operator,
)
from .inequality import (
    InequalityReport,
    check_thm1,
    check_thm2,
    corollary_bounds,
    d_2,
    d_inf,
    full_report,
    isoperimetric_deficit,
    stability_bounds,
)
from .midpoint import (
    CircumscribedPolygon,
    MidpointSet,
    all_kgons_regular,
    circumscribed_polygon,
    midpoint_is_degenerate,
    midpoint_oriented_area,
    midpoint_point_at,
    midpoint_set,
)
from .preserving import (
    PreservingSet,
    k_central_symmetral,
    minkowski_sum,
    preserving_curvature,
    preserving_from_isogonal,
    preserving_oriented_area,
    preserving_point_at,
    preserving_set,
    preserving_singularities,
)

__version__ = "0.1.0"
