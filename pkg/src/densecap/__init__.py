"""Dense-coding capacity of thermal states of two-qubit Heisenberg models."""
from .densecoding import (
    CapacityResult,
    EncodingEnsemble,
    asymptotic_chi_large_anisotropy,
    average_signal_state,
    capacity_closed,
    capacity_closed_dm,
    capacity_closed_xxz,
    capacity_generic,
    capacity_point,
    critical_temperature,
    standard_ensemble,
    validity,
)
from .entanglement import concurrence
from .errors import (
    DomainError,
    InvalidBracket,
    InvalidTemperature,
    NotHermitian,
    NotPositiveSemidefinite,
    WrongModelKind,
    ZeroCoupling,
)
from .numkernel import (
    SpectralDecomposition,
    hermitian_eigendecompose,
    kron,
    partial_trace_first,
    von_neumann_entropy,
)
from .spinmodels import (
    Model,
    ModelParams,
    ThermalState,
    dm_aux,
    eigensystem,
    ground_state_mixture,
    hamiltonian,
    thermal_state,
    xxz_aux,
)

__version__ = "0.1.0"
