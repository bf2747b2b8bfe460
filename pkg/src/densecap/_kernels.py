"""Hot loops: cyclic Jacobi for small Hermitian matrices, entropy, concurrence.

Everything here takes and returns plain numpy arrays so the same source runs
under numba or as ordinary Python (see ``_jit``).
"""
import numpy as np

from ._jit import njit

JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100
# Eigenvalues of a state below this fraction of the largest one are roundoff.
RANK_FLOOR = 64 * np.finfo(np.float64).eps

SIGMA_YY = np.array(
    [[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]], dtype=np.complex128
)


@njit
def off_norm(a):
    n = a.shape[0]
    acc = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                acc += a[i, j].real ** 2 + a[i, j].imag ** 2
    return np.sqrt(acc)


@njit
def jacobi_eigh(a, tol=JACOBI_TOL, max_sweeps=JACOBI_MAX_SWEEPS):
    """Eigenpairs of a Hermitian matrix by cyclic complex Jacobi rotations.

    Returns ``(w, v)`` with eigenvalues unsorted and eigenvectors as columns.
    Convergence is declared when the off-diagonal Frobenius norm drops below
    ``tol * max(1, ||a||_F)``.
    """
    n = a.shape[0]
    A = a.astype(np.complex128).copy()
    V = np.eye(n, dtype=np.complex128)
    scale = 0.0
    for i in range(n):
        for j in range(n):
            scale += A[i, j].real ** 2 + A[i, j].imag ** 2
    scale = max(1.0, np.sqrt(scale))

    for _ in range(max_sweeps):
        if off_norm(A) <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                mag = abs(apq)
                if mag < 1e-300:
                    continue
                phase = np.conj(apq / mag)
                theta = (A[q, q].real - A[p, p].real) / (2.0 * mag)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # G = diag(phase on q) @ real rotation; A <- G^H A G
                gqp = -s * phase
                gqq = c * phase
                for k in range(n):
                    akp = A[k, p]
                    akq = A[k, q]
                    A[k, p] = akp * c + akq * gqp
                    A[k, q] = akp * s + akq * gqq
                for k in range(n):
                    apk = A[p, k]
                    aqk = A[q, k]
                    A[p, k] = c * apk + np.conj(gqp) * aqk
                    A[q, k] = s * apk + np.conj(gqq) * aqk
                A[p, q] = 0.0
                A[q, p] = 0.0
                A[p, p] = A[p, p].real
                A[q, q] = A[q, q].real
                for k in range(n):
                    vkp = V[k, p]
                    vkq = V[k, q]
                    V[k, p] = vkp * c + vkq * gqp
                    V[k, q] = vkp * s + vkq * gqq

    w = np.empty(n)
    for i in range(n):
        w[i] = A[i, i].real
    return w, V


@njit
def entropy_bits_from_eigvals(w):
    s = 0.0
    for x in w:
        if x > 0.0:
            s -= x * np.log2(x)
    return s


@njit
def singular_values(m):
    """Singular values of a square matrix, descending.

    Read off the Hermitian dilation ``[[0, m], [m^H, 0]]`` whose spectrum is
    ``+-sigma``; this keeps small singular values accurate to roundoff instead
    of to its square root.
    """
    n = m.shape[0]
    big = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            big[i, n + j] = m[i, j]
            big[n + j, i] = np.conj(m[i, j])
    w, _ = jacobi_eigh(big)
    w = np.sort(w)[::-1]
    out = np.empty(n)
    for i in range(n):
        out[i] = max(w[i], 0.0)
    return out


@njit
def wootters_lambdas(rho):
    """Decreasing square roots of the spectrum of rho * rho_tilde.

    Uses rho = X X^H with X = V sqrt(p); the wanted values are the singular
    values of X^T (sy x sy) X.
    """
    w, v = jacobi_eigh(rho)
    wmax = w.max()
    n = w.shape[0]
    x = np.zeros((n, n), dtype=np.complex128)
    for j in range(n):
        if w[j] > RANK_FLOOR * wmax:
            r = np.sqrt(w[j])
            for i in range(n):
                x[i, j] = v[i, j] * r
    tau = x.T @ (SIGMA_YY @ x)
    return singular_values(tau)


@njit
def concurrence_value(rho):
    lam = wootters_lambdas(rho)
    return max(0.0, lam[0] - lam[1] - lam[2] - lam[3])


@njit
def batch_concurrence(rhos):
    out = np.empty(rhos.shape[0])
    for k in range(rhos.shape[0]):
        out[k] = concurrence_value(rhos[k])
    return out


@njit
def batch_entropy_bits(rhos):
    out = np.empty(rhos.shape[0])
    for k in range(rhos.shape[0]):
        w, _ = jacobi_eigh(rhos[k])
        for i in range(w.shape[0]):
            if w[i] < 0.0:
                w[i] = 0.0
        out[k] = entropy_bits_from_eigvals(w)
    return out
