"""Best uniform approximation of sgn(x) on [-A,-1] U [1,B] and its asymptotics."""

from ._twogap import (
    ConvergenceError,
    DomainError,
    GreenCharacteristics,
    PrecisionError,
    PredictionRecord,
    RemezResult,
    best_approx,
    characteristics,
    degenerate_reference,
    green_dc,
    grid_reference,
    harmonic_measure,
    predict,
    run_cli,
    symmetric_reference,
    theorem_constant,
    theta_ratio,
)

__all__ = [
    "ConvergenceError",
    "DomainError",
    "GreenCharacteristics",
    "PrecisionError",
    "PredictionRecord",
    "RemezResult",
    "best_approx",
    "characteristics",
    "degenerate_reference",
    "green_dc",
    "grid_reference",
    "harmonic_measure",
    "predict",
    "run_cli",
    "symmetric_reference",
    "theorem_constant",
    "theta_ratio",
]

__version__ = "0.1.0"
