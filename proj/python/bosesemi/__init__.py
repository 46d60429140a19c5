"""Two-mode Bose-Hubbard spectra: exact diagonalization and semiclassical quantization."""

from ._core import (
    BarrierInfo,
    ConvergenceError,
    DomainError,
    EnergyRange,
    FixedPoint,
    LevelDensity,
    ModelParams,
    UnsupportedGeometry,
    Wavefunction,
    action,
    arg_gamma_half,
    barrier,
    classical_range,
    exact_spectrum,
    fixed_points,
    hamiltonian,
    level_density,
    period,
    phase_correction,
    semiclassical_spectrum,
    sweep_epsilon,
    wavefunction,
)

__all__ = [
    "BarrierInfo",
    "ConvergenceError",
    "DomainError",
    "EnergyRange",
    "FixedPoint",
    "LevelDensity",
    "ModelParams",
    "UnsupportedGeometry",
    "Wavefunction",
    "action",
    "arg_gamma_half",
    "barrier",
    "classical_range",
    "exact_spectrum",
    "fixed_points",
    "hamiltonian",
    "level_density",
    "period",
    "phase_correction",
    "semiclassical_spectrum",
    "sweep_epsilon",
    "wavefunction",
]
