"""Perimeter bounds and tilings for isoperimetric pentagonal tilings."""

from ._pentiso import (
    ConvergenceError,
    DomainError,
    Error,
    InfeasibleError,
    MalformedMeshError,
    NonSequiturError,
    ParseError,
    UnboundedError,
    UnknownClaimError,
    angle_tilings,
    circumscribe,
    cot_perimeter,
    efficient_angle_bounds,
    equilateral_champion,
    grid_oracle,
    minimize,
    one_free_angle_perimeter,
    perimeter_per_tile,
    preset_names,
    ratio_lower_bound,
    reference_perimeters,
    run_claims,
    tiling,
    truncate,
    validate_tiling,
)

__all__ = [name for name in dir() if not name.startswith("_")]
