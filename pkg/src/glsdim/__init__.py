"""Exact superdimensions of finite-dimensional simple gl(m|n)-modules."""
from .errors import (
    BoundExceeded,
    DimensionMismatch,
    HookViolation,
    NotDominant,
    NotInCoset,
    ShellNotClean,
    SuperdimError,
    UnsupportedShape,
)
from .superdim import SuperdimReport, glambda_dim, sdim_abs, superdimension
from .weights import RhoShiftedWeight, SuperWeight, rho_shift

__all__ = [
    "BoundExceeded",
    "DimensionMismatch",
    "HookViolation",
    "NotDominant",
    "NotInCoset",
    "RhoShiftedWeight",
    "ShellNotClean",
    "SuperWeight",
    "SuperdimError",
    "SuperdimReport",
    "UnsupportedShape",
    "glambda_dim",
    "rho_shift",
    "sdim_abs",
    "superdimension",
]
