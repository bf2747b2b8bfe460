"""Two-qubit XXZ and Dzyaloshinski-Moriya Heisenberg models.

Hamiltonians, analytic eigensystems, Gibbs states and zero-temperature
ground-manifold mixtures. Units: k_B = 1, energies and temperatures in the
same (dimensionless) scale as J.
"""
import enum
from dataclasses import dataclass, replace

import numpy as np

from .errors import InvalidTemperature, WrongModelKind, ZeroCoupling
from .numkernel import (
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    SpectralDecomposition,
    check_density_matrix,
    ket,
)

XX = np.kron(SIGMA_X, SIGMA_X)
YY = np.kron(SIGMA_Y, SIGMA_Y)
ZZ = np.kron(SIGMA_Z, SIGMA_Z)
XY_MINUS_YX = np.kron(SIGMA_X, SIGMA_Y) - np.kron(SIGMA_Y, SIGMA_X)

SQRT1_2 = 1.0 / np.sqrt(2.0)


class Model(str, enum.Enum):
    XXZ = "xxz"
    DM = "dm"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ModelParams:
    """A model and its couplings.

    ``anisotropy`` is Delta for XXZ and the z-aligned DM strength D for DM.
    ``T`` may be None for operations that do not need a temperature.
    """

    kind: Model
    J: float
    anisotropy: float
    T: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Model(self.kind))

    @classmethod
    def xxz(cls, J, delta, T=None):
        return cls(Model.XXZ, float(J), float(delta), None if T is None else float(T))

    @classmethod
    def dm(cls, J, D, T=None):
        return cls(Model.DM, float(J), float(D), None if T is None else float(T))

    def at(self, T):
        return replace(self, T=float(T))

    @property
    def beta(self):
        return 1.0 / require_temperature(self)


@dataclass(frozen=True)
class ThermalState:
    rho: np.ndarray
    partition_function: float
    params: ModelParams
    weights: np.ndarray  # Boltzmann probabilities, eigensystem order


@dataclass(frozen=True)
class XxzAux:
    lam: float
    xi: float


@dataclass(frozen=True)
class DmAux:
    eta: float
    zeta: float
    delta: float
    theta: float


def require_temperature(params):
    T = params.T
    if T is None or not np.isfinite(T) or T <= 0.0:
        raise InvalidTemperature(f"temperature must be positive and finite, got {T!r}")
    return T


def require_coupling(params):
    if params.J == 0.0:
        raise ZeroCoupling("closed-form expressions need J != 0")


def require_kind(params, kind):
    if params.kind is not kind:
        raise WrongModelKind(f"expected a {kind.value} model, got {params.kind.value}")


def hamiltonian(params):
    """4x4 Hamiltonian in the basis |11>, |10>, |01>, |00>."""
    J, a = params.J, params.anisotropy
    if params.kind is Model.XXZ:
        return 0.5 * J * (XX + YY + a * ZZ)
    return 0.5 * J * (XX + YY + ZZ + a * XY_MINUS_YX)


def dm_theta(D):
    return float(np.arctan(D))


def eigensystem(params):
    """Analytic eigenpairs, ascending by energy.

    Columns are |00>, |11>, and the two entangled states |Psi+->  (XXZ) or
    |+->  (DM), sorted by eigenvalue with ties kept in that listing order.
    """
    J, a = params.J, params.anisotropy
    if params.kind is Model.XXZ:
        e_flat = 0.5 * J * a
        e_plus = -0.5 * J * a + J
        e_minus = -0.5 * J * a - J
        phase = 1.0
    else:
        root = J * np.sqrt(1.0 + a * a)
        e_flat = 0.5 * J
        e_plus = root - 0.5 * J
        e_minus = -root - 0.5 * J
        phase = np.exp(1j * dm_theta(a))
    vecs = [
        ket("00"),
        ket("11"),
        SQRT1_2 * (ket("01") + phase * ket("10")),
        SQRT1_2 * (ket("01") - phase * ket("10")),
    ]
    energies = np.array([e_flat, e_flat, e_plus, e_minus])
    order = np.argsort(energies, kind="stable")
    return SpectralDecomposition(
        eigenvalues=energies[order], eigenvectors=np.column_stack([vecs[k] for k in order])
    )


def boltzmann_weights(energies, T):
    """Normalized Gibbs weights and log partition function, shifted by E_min."""
    e = np.asarray(energies, dtype=float)
    e0 = e.min()
    w = np.exp(-(e - e0) / T)
    z_shifted = w.sum()
    return w / z_shifted, np.log(z_shifted) - e0 / T


def thermal_state(params):
    """Gibbs state exp(-H/T)/Z built on the analytic eigenbasis."""
    T = require_temperature(params)
    spec = eigensystem(params)
    p, log_z = boltzmann_weights(spec.eigenvalues, T)
    v = spec.eigenvectors
    rho = (v * p) @ v.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    check_density_matrix(rho)
    with np.errstate(over="ignore"):
        z = float(np.exp(log_z))
    return ThermalState(rho=rho, partition_function=z, params=params, weights=p)


def ground_state_mixture(params, degeneracy_tol=1e-9):
    """Equal mixture over the ground manifold (the T -> 0+ Gibbs limit)."""
    if degeneracy_tol <= 0:
        raise ValueError("degeneracy_tol must be positive")
    spec = eigensystem(params)
    e = spec.eigenvalues
    e_min = e.min()
    mask = e - e_min <= degeneracy_tol * max(1.0, abs(e_min))
    v = spec.eigenvectors[:, mask]
    rho = v @ v.conj().T / mask.sum()
    return check_density_matrix(rho)


def xxz_aux(params):
    """lambda = 1 + e^{J Delta/T} cosh(J/T),  xi = Delta cosh(J/T) + sinh(J/T).

    Both overflow to inf at very low T; the capacity formulas work in log space.
    """
    require_kind(params, Model.XXZ)
    T = require_temperature(params)
    J, delta = params.J, params.anisotropy
    with np.errstate(over="ignore"):
        ch, sh = np.cosh(J / T), np.sinh(J / T)
        lam = 1.0 + np.exp(J * delta / T) * ch
        xi = delta * ch + sh
    return XxzAux(lam=float(lam), xi=float(xi))


def dm_aux(params):
    require_kind(params, Model.DM)
    T = require_temperature(params)
    J, D = params.J, params.anisotropy
    delta = 2.0 * J * np.sqrt(1.0 + D * D)
    with np.errstate(over="ignore"):
        ch, sh = np.cosh(delta / (2 * T)), np.sinh(delta / (2 * T))
        eta = 1.0 + np.exp(J / T) * ch
        zeta = 2.0 * J * ch + delta * sh
    return DmAux(eta=float(eta), zeta=float(zeta), delta=float(delta), theta=dm_theta(D))
