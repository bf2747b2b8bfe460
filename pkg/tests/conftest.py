import math

import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_density_matrix(rng, dim=4, rank=None):
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_unitary(rng, dim=2):
    z = (rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_hermitian(rng, dim=4):
    a = rng.uniform(-1, 1, (dim, dim)) + 1j * rng.uniform(-1, 1, (dim, dim))
    return 0.5 * (a + a.conj().T)


def limit_state(T, sign):
    """The large-|Delta| thermal state with off-diagonal sign * tanh(1/T)."""
    t = math.tanh(1.0 / T)
    rho = np.zeros((4, 4), dtype=complex)
    rho[1, 1] = rho[2, 2] = 0.5
    rho[1, 2] = rho[2, 1] = 0.5 * sign * t
    return rho


def chi_xxz_literal(J, delta, T):
    lam = 1 + math.exp(J * delta / T) * math.cosh(J / T)
    xi = delta * math.cosh(J / T) + math.sinh(J / T)
    return (T * lam * (math.log(4) - 2 * math.log(lam)) + 2 * J * xi * math.exp(J * delta / T)) / (
        T * lam * math.log(4)
    )


def chi_dm_literal(J, D, T):
    d = 2 * J * math.sqrt(1 + D * D)
    eta = 1 + math.exp(J / T) * math.cosh(d / (2 * T))
    zeta = 2 * J * math.cosh(d / (2 * T)) + d * math.sinh(d / (2 * T))
    return (T * eta * (math.log(4) - 2 * math.log(eta)) + zeta * math.exp(J / T)) / (T * eta * math.log(4))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import REPORT
    except ImportError:
        return
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)
