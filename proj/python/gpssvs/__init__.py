"""Generalized photon-subtracted squeezed vacuum states for f-deformed oscillators."""

from ._core import (
    AnnihilatedStateError,
    ConsistencyError,
    ConvergenceError,
    DimensionError,
    FockExpansion,
    GpssvsError,
    Nonlinearity,
    TruncationError,
    number_stats,
    pssvs,
    quadratures,
    squeeze_by_exponential,
    squeezed_vacuum,
    subtract_photons,
    verify,
    wigner_grid,
    wigner_point,
    wigner_point_oracle,
)

__all__ = [
    "AnnihilatedStateError",
    "ConsistencyError",
    "ConvergenceError",
    "DimensionError",
    "FockExpansion",
    "GpssvsError",
    "Nonlinearity",
    "TruncationError",
    "number_stats",
    "pssvs",
    "quadratures",
    "squeeze_by_exponential",
    "squeezed_vacuum",
    "subtract_photons",
    "verify",
    "wigner_grid",
    "wigner_point",
    "wigner_point_oracle",
]
