from .core import (
    Circle,
    Packing,
    PlacedCircle,
    SoddyResult,
    Violation,
    apollonius_external,
    center_distance,
    circle_fits_region,
    contact_graph,
    enclosing_circle,
    gap,
    interstice_contains,
    scale_translate,
    soddy_circles,
    tangent,
    tangent_circle_to_pair,
    validate_packing,
)
from .gaps import GapAnalysis, gamma_blocker, gap_points, max_radius_at, surrounds
from .layout import LayoutError, LayoutResult, layout_packing, tangency_residual
from .width import (
    WidthParams,
    chain_is_valid,
    greedy_chain_count,
    parabola_bounds_hold,
    width,
    width_params,
)

__all__ = [
    "Circle", "Packing", "PlacedCircle", "SoddyResult", "Violation",
    "apollonius_external", "center_distance", "circle_fits_region",
    "contact_graph", "enclosing_circle", "gap", "interstice_contains",
    "scale_translate", "soddy_circles", "tangent", "tangent_circle_to_pair",
    "validate_packing", "GapAnalysis", "gamma_blocker", "gap_points",
    "max_radius_at", "surrounds", "LayoutError", "LayoutResult",
    "layout_packing", "tangency_residual", "WidthParams", "chain_is_valid",
    "greedy_chain_count", "parabola_bounds_hold", "width", "width_params",
]
