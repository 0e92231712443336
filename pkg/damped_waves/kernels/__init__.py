from damped_waves.kernels.model_spec import ModelSpec
from damped_waves.kernels.characteristic_roots import (
    RootArrays,
    RootRegime,
    RootsAtXi,
    char_roots,
    root_arrays,
)
from damped_waves.kernels.kernel_values import (
    KernelArrays,
    KernelValues,
    kernel_arrays,
    kernel_values,
    ode_residual,
)

__all__ = [
    "ModelSpec",
    "RootArrays",
    "RootRegime",
    "RootsAtXi",
    "char_roots",
    "root_arrays",
    "KernelArrays",
    "KernelValues",
    "kernel_arrays",
    "kernel_values",
    "ode_residual",
]
