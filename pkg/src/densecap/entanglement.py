"""Wootters concurrence of two-qubit states."""
import numpy as np

from . import _kernels
from .numkernel import check_density_matrix


def concurrence(rho):
    """C = max(0, l1 - l2 - l3 - l4), l_i the decreasing square roots of the
    eigenvalues of rho (sy x sy) rho* (sy x sy).

    The l_i are obtained as singular values of X^T (sy x sy) X with rho = X X^H,
    which avoids the non-Hermitian product and keeps l_i near zero accurate.
    """
    rho = check_density_matrix(rho)
    return float(min(1.0, _kernels.concurrence_value(rho)))


def wootters_lambdas(rho):
    return _kernels.wootters_lambdas(check_density_matrix(rho))


def batch_concurrence(rhos):
    """Concurrence for a stack of already-validated states, shape (N, 4, 4)."""
    rhos = np.ascontiguousarray(rhos, dtype=np.complex128)
    if rhos.ndim != 3 or rhos.shape[1:] != (4, 4):
        raise ValueError(f"expected shape (N, 4, 4), got {rhos.shape}")
    return np.minimum(1.0, _kernels.batch_concurrence(rhos))


