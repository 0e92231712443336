from damped_waves.semilinear.nonlinearity import (
    Nonlinearity,
    NonlinearityVariant,
    StepperConfig,
)
from damped_waves.semilinear.semilinear_engine import (
    RunOutcome,
    RunStatus,
    SemilinearEngine,
    etd_step,
    run,
)
from damped_waves.semilinear.picard import PicardResult, picard_iterate

__all__ = [
    "Nonlinearity",
    "NonlinearityVariant",
    "StepperConfig",
    "RunOutcome",
    "RunStatus",
    "SemilinearEngine",
    "etd_step",
    "run",
    "PicardResult",
    "picard_iterate",
]
