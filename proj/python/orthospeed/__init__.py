"""Charge-qubit/cavity evolution and orthogonality-speed analysis."""

from ._core import (
    CellResult,
    DetectorSettings,
    DeviceParams,
    DomainError,
    Engine,
    FieldKind,
    FieldSpec,
    FieldState,
    JointState,
    ModelParams,
    NumericError,
    OrthogonalityEvent,
    QubitDensity,
    SeriesEval,
    SpectralPair,
    SpeedReport,
    TracePoint,
    Window,
    binomial_rho_series,
    charging_energy,
    coupling_g,
    coupling_g_alt,
    default_qubit,
    detuning_delta,
    eig2,
    evolve_joint,
    fock_rho_direct,
    make_binomial,
    make_coherent_approx,
    make_fock,
    mean_photon,
    oracle_rho,
    overlaps,
    qubit_state,
    rabi_frequency,
    reduced_qubit,
    regime_warning,
    run_cell,
)

__version__ = "0.1.0"

__all__ = [
    "CellResult",
    "DetectorSettings",
    "DeviceParams",
    "DomainError",
    "Engine",
    "FieldKind",
    "FieldSpec",
    "FieldState",
    "JointState",
    "ModelParams",
    "NumericError",
    "OrthogonalityEvent",
    "QubitDensity",
    "SeriesEval",
    "SpectralPair",
    "SpeedReport",
    "TracePoint",
    "Window",
    "binomial_rho_series",
    "charging_energy",
    "coupling_g",
    "coupling_g_alt",
    "default_qubit",
    "detuning_delta",
    "eig2",
    "evolve_joint",
    "fock_rho_direct",
    "make_binomial",
    "make_coherent_approx",
    "make_fock",
    "mean_photon",
    "oracle_rho",
    "overlaps",
    "qubit_state",
    "rabi_frequency",
    "reduced_qubit",
    "regime_warning",
    "run_cell",
]
