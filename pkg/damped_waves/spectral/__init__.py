from damped_waves.spectral.grid import GridSpec
from damped_waves.spectral.fields import (
    RealField,
    SpectralField,
    apply_multiplier,
    derivative_multiplier,
    derivative_tensor_magnitude,
    forward_transform,
    frac_symbol,
    gradient,
    grid_norm,
    inverse_transform,
    sobolev_seminorm,
)

__all__ = [
    "GridSpec",
    "RealField",
    "SpectralField",
    "apply_multiplier",
    "derivative_multiplier",
    "derivative_tensor_magnitude",
    "forward_transform",
    "frac_symbol",
    "gradient",
    "grid_norm",
    "inverse_transform",
    "sobolev_seminorm",
]
