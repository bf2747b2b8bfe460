"""Dense complex linear algebra and entropy for 2x2 and 4x4 matrices.

Matrices are plain ``complex128`` numpy arrays. Two-qubit operators use the
basis order |11>, |10>, |01>, |00>; single-qubit operators use |1>, |0>. In
that order the textbook Pauli matrices and ``np.kron`` apply unchanged.
"""
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import NotHermitian, NotPositiveSemidefinite

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
DEGENERACY_TOL = 1e-12

I2 = np.eye(2, dtype=np.complex128)
I4 = np.eye(4, dtype=np.complex128)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)

# Index of each computational ket in the artifact basis.
KET_INDEX = {"11": 0, "10": 1, "01": 2, "00": 3}
QUBIT_INDEX = {1: 0, 0: 1}


def ket(label):
    """Two-qubit basis vector, e.g. ``ket("01")``; one-qubit for length-1 labels."""
    if len(label) == 1:
        v = np.zeros(2, dtype=np.complex128)
        v[QUBIT_INDEX[int(label)]] = 1.0
        return v
    v = np.zeros(4, dtype=np.complex128)
    v[KET_INDEX[label]] = 1.0
    return v


def projector(vec):
    vec = np.asarray(vec, dtype=np.complex128)
    return np.outer(vec, vec.conj())


@dataclass(frozen=True)
class SpectralDecomposition:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # columns

    def reconstruct(self):
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T

    def __iter__(self):
        return iter((self.eigenvalues, self.eigenvectors))


def as_matrix(m):
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def is_hermitian(m, tol=HERMITIAN_TOL):
    return float(np.max(np.abs(m - m.conj().T))) <= tol


def kron(a, b):
    return np.kron(as_matrix(a), as_matrix(b))


def dagger(m):
    return np.asarray(m).conj().T


def _canonical_phase(v):
    """Rotate the global phase so the first non-negligible entry is real positive."""
    for x in v:
        if abs(x) > 1e-12:
            return v * (abs(x) / x)
    return v


def hermitian_eigendecompose(m):
    """Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix.

    Every eigenvector is phase-fixed so its first non-negligible component is
    real and positive. Within a degenerate cluster, vectors are ordered by the
    position of that component.
    """
    m = as_matrix(m)
    if not is_hermitian(m):
        raise NotHermitian(f"matrix is not Hermitian (max asymmetry {np.max(np.abs(m - m.conj().T)):.3g})")
    w, v = _kernels.jacobi_eigh(m)
    v = np.column_stack([_canonical_phase(v[:, k]) for k in range(len(w))])

    spread = max(1.0, float(np.max(np.abs(w))))
    lead = [int(np.argmax(np.abs(v[:, k]) > 1e-12)) for k in range(len(w))]
    order = sorted(range(len(w)), key=lambda k: w[k])
    # Break ties deterministically: cluster near-equal values, sort by leading index.
    out, i = [], 0
    while i < len(order):
        j = i + 1
        while j < len(order) and w[order[j]] - w[order[i]] <= DEGENERACY_TOL * spread:
            j += 1
        out.extend(sorted(order[i:j], key=lambda k: (lead[k], w[k])))
        i = j
    return SpectralDecomposition(eigenvalues=w[out].copy(), eigenvectors=v[:, out].copy())


def check_density_matrix(m, dim=4):
    """Validate and return ``m`` as a density matrix (Hermitian, unit trace, PSD)."""
    m = as_matrix(m)
    if m.shape != (dim, dim):
        raise ValueError(f"expected a {dim}x{dim} density matrix, got shape {m.shape}")
    if not is_hermitian(m):
        raise NotHermitian("density matrix is not Hermitian")
    tr = np.trace(m)
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValueError(f"density matrix trace is {tr.real:.15g}, expected 1")
    w, _ = _kernels.jacobi_eigh(m)
    if w.min() < -PSD_TOL:
        raise NotPositiveSemidefinite(f"eigenvalue {w.min():.3g} below -{PSD_TOL:g}")
    return m


def clamp_eigenvalues(w):
    """Zero out eigenvalues in [-PSD_TOL, 0); reject anything more negative."""
    w = np.asarray(w, dtype=float)
    if w.min() < -PSD_TOL:
        raise NotPositiveSemidefinite(f"eigenvalue {w.min():.3g} below -{PSD_TOL:g}")
    return np.where(w < 0.0, 0.0, w)


def von_neumann_entropy(rho):
    """Von Neumann entropy in bits."""
    rho = as_matrix(rho)
    if not is_hermitian(rho):
        raise NotHermitian("density matrix is not Hermitian")
    w, _ = _kernels.jacobi_eigh(rho)
    return float(_kernels.entropy_bits_from_eigvals(clamp_eigenvalues(w)))


def partial_trace_first(rho):
    """Reduced state of the second qubit."""
    r = as_matrix(rho).reshape(2, 2, 2, 2)
    return np.einsum("ijik->jk", r)

