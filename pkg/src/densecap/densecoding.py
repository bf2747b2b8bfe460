"""Optimal dense coding with a shared two-qubit state.

The sender applies one of four mutually orthogonal unitaries, with equal
probability, to the first qubit. The capacity is the Holevo quantity
S(rho_avg) - S(rho) in bits. Closed forms for the thermal states of the two
spin models are evaluated in log space so they stay finite as T -> 0.
"""
import math
from dataclasses import dataclass

import numpy as np

from . import numkernel as nk
from .entanglement import concurrence
from .errors import InvalidBracket, InvalidTemperature
from .spinmodels import (
    Model,
    ModelParams,
    require_coupling,
    require_kind,
    require_temperature,
    thermal_state,
)

LN2 = math.log(2.0)
BISECTION_MAX_ITER = 200
ROOT_TOL = 1e-12
SCAN_RESOLUTION = 1e-3


@dataclass(frozen=True)
class EncodingEnsemble:
    unitaries: tuple
    probabilities: tuple
    labels: tuple = ("00", "10", "01", "11")

    def __post_init__(self):
        if len(self.unitaries) != 4 or len(self.probabilities) != 4:
            raise ValueError("a two-qubit dense-coding ensemble has four signals")
        if any(abs(p - 0.25) > 1e-15 for p in self.probabilities):
            raise ValueError("the optimal ensemble has equal probabilities")
        for i, u in enumerate(self.unitaries):
            if np.max(np.abs(u.conj().T @ u - nk.I2)) > 1e-12:
                raise ValueError(f"signal {i} is not unitary")
            for j, v in enumerate(self.unitaries):
                expected = 2.0 if i == j else 0.0
                if abs(np.trace(u.conj().T @ v) - expected) > 1e-12:
                    raise ValueError(f"signals {i} and {j} are not orthogonal")


@dataclass(frozen=True)
class CapacityResult:
    chi: float
    entropy_rho: float
    entropy_avg: float
    concurrence: float
    valid_for_dense_coding: bool
    params: ModelParams | None = None


def _shift_unitary(m, n):
    """|x> -> exp(i pi m x) |x + n mod 2> in the |1>, |0> ordering."""
    u = np.zeros((2, 2), dtype=np.complex128)
    for x in (0, 1):
        target = (x + n) % 2
        u[nk.QUBIT_INDEX[target], nk.QUBIT_INDEX[x]] = np.exp(1j * np.pi * m * x)
    # exp(i pi) carries a 1e-16 imaginary part
    return np.round(u.real, 15) + 1j * np.round(u.imag, 15)


def standard_ensemble():
    """U00 = I, U10 = phase flip, U01 = bit flip, U11 = both; priors 1/4."""
    unitaries = tuple(_shift_unitary(m, n) for m, n in ((0, 0), (1, 0), (0, 1), (1, 1)))
    return EncodingEnsemble(unitaries=unitaries, probabilities=(0.25,) * 4)


def average_signal_state(rho, ens=None):
    ens = standard_ensemble() if ens is None else ens
    rho = nk.check_density_matrix(rho)
    avg = np.zeros((4, 4), dtype=np.complex128)
    for p, u in zip(ens.probabilities, ens.unitaries):
        big = nk.kron(u, nk.I2)
        avg += p * (big @ rho @ big.conj().T)
    return nk.check_density_matrix(avg)


def capacity_generic(rho, params=None):
    """chi = S(rho_avg) - S(rho) for an arbitrary two-qubit state."""
    rho = nk.check_density_matrix(rho)
    s_rho = nk.von_neumann_entropy(rho)
    s_avg = nk.von_neumann_entropy(average_signal_state(rho))
    chi = s_avg - s_rho
    return CapacityResult(
        chi=chi,
        entropy_rho=s_rho,
        entropy_avg=s_avg,
        concurrence=concurrence(rho),
        valid_for_dense_coding=bool(chi > 1.0),
        params=params,
    )


def _logcosh(x):
    ax = np.abs(x)
    return ax + np.log1p(np.exp(-2.0 * ax)) - LN2


def _sigmoid(x):
    return 0.5 * (1.0 + np.tanh(0.5 * x))


def _reduced(kind, J, a, T):
    """Map either model onto (u, v) with Gibbs weights 1, 1, e^{u-v}, e^{u+v}.

    XXZ: u = J Delta / T, v = |J| / T.  DM: u = J / T, v = |delta| / (2 T).
    """
    if Model(kind) is Model.XXZ:
        return J * a / T, np.abs(J) / T
    return J / T, np.abs(J) * np.sqrt(1.0 + a * a) / T


def _log_norm_and_gain(u, v):
    """ln(lambda) (or ln(eta)) and the energy term divided by the norm.

    lambda = 1 + e^u cosh v; gain = e^u (u cosh v + v sinh v) / lambda,
    i.e. J xi e^{J Delta/T} / (T lambda) for XXZ and zeta e^{J/T} / (2 T eta)
    for DM.
    """
    lead = u + _logcosh(v)
    return np.logaddexp(0.0, lead), _sigmoid(lead) * (u + v * np.tanh(v)), lead


def _entropy_nats(u, v):
    """S(rho) = ln 2 + ln(lambda) - gain, rearranged to avoid cancellation.

    For lead > 0 the two large terms cancel analytically and what remains is a
    sum of non-negative pieces.
    """
    log_norm, gain, lead = _log_norm_and_gain(u, v)
    with np.errstate(over="ignore"):
        cold = (
            (u + v) * _sigmoid(-lead)
            + 2.0 * v * _sigmoid(lead) * _sigmoid(-2.0 * v)
            + np.log1p(np.exp(-2.0 * v))
            + np.log1p(np.exp(-np.abs(lead)))
        )
    hot = LN2 + log_norm - gain
    return np.where(lead > 0.0, cold, hot)


def chi_closed(kind, J, anisotropy, T):
    """Vectorized closed-form capacity in bits; J must be nonzero and T positive."""
    J, a, T = (np.asarray(x, dtype=float) for x in (J, anisotropy, T))
    return 2.0 - _entropy_nats(*_reduced(kind, J, a, T)) / LN2


def closed_entropy_bits(kind, J, anisotropy, T):
    J, a, T = (np.asarray(x, dtype=float) for x in (J, anisotropy, T))
    return _entropy_nats(*_reduced(kind, J, a, T)) / LN2


def _closed_checks(params, kind):
    require_kind(params, kind)
    require_temperature(params)
    require_coupling(params)


def capacity_closed_xxz(params):
    _closed_checks(params, Model.XXZ)
    return float(chi_closed(Model.XXZ, params.J, params.anisotropy, params.T))


def capacity_closed_dm(params):
    _closed_checks(params, Model.DM)
    return float(chi_closed(Model.DM, params.J, params.anisotropy, params.T))


def capacity_closed(params):
    if params.kind is Model.XXZ:
        return capacity_closed_xxz(params)
    return capacity_closed_dm(params)


def validity(params):
    """Whether chi > 1, tested through the model's inequality.

    XXZ: J xi e^{J Delta/T} > T lambda ln(lambda); DM: zeta e^{J/T} > 2 T eta
    ln(eta). Both sides are divided by the positive normalization first.
    """
    require_temperature(params)
    require_coupling(params)
    log_norm, gain, _ = _log_norm_and_gain(*_reduced(params.kind, params.J, params.anisotropy, params.T))
    return bool(gain > log_norm)


def asymptotic_chi_large_anisotropy(T):
    """Capacity of the |Delta| -> infinity limit state with J Delta > 0."""
    if not np.isfinite(T) or T <= 0.0:
        raise InvalidTemperature(f"temperature must be positive, got {T!r}")
    if T < 0.2:
        soft = 2.0 + T * math.log1p(math.exp(-2.0 / T))
    else:
        soft = T * math.log1p(math.exp(2.0 / T))
    return (1.0 + T * math.log(4.0) - soft + math.tanh(1.0 / T)) / (T * LN2)


def capacity_point(params):
    """CapacityResult for a thermal state, chi from the closed form.

    At J = 0 no closed form exists and the generic route is used (rho = I/4).
    """
    require_temperature(params)
    ts = thermal_state(params)
    if params.J == 0.0:
        return capacity_generic(ts.rho, params)
    s_rho = float(closed_entropy_bits(params.kind, params.J, params.anisotropy, params.T))
    return CapacityResult(
        chi=2.0 - s_rho,
        entropy_rho=s_rho,
        entropy_avg=2.0,
        concurrence=concurrence(ts.rho),
        valid_for_dense_coding=validity(params),
        params=params,
    )


def _check_bracket(t_lo, t_hi):
    if not (np.isfinite(t_lo) and np.isfinite(t_hi)) or t_lo <= 0.0 or t_lo >= t_hi:
        raise InvalidBracket(f"need 0 < t_lo < t_hi, got [{t_lo}, {t_hi}]")


def _scan(params, t_lo, t_hi, resolution):
    n = max(2, int(math.ceil((t_hi - t_lo) / resolution)) + 1)
    ts = t_lo + (t_hi - t_lo) * np.arange(n) / (n - 1)
    f = chi_closed(params.kind, params.J, params.anisotropy, ts) - 1.0
    return ts, f


def sign_change_intervals(params, t_lo, t_hi, resolution=SCAN_RESOLUTION):
    """Intervals [a, b] of width <= resolution over which chi - 1 changes sign.

    Samples where chi == 1 exactly are skipped, so a flat approach to 1 (as in
    the T -> 0 product-state limits) is not reported as a crossing.
    """
    _check_bracket(t_lo, t_hi)
    require_coupling(params)
    ts, f = _scan(params, t_lo, t_hi, resolution)
    nz = np.flatnonzero(f != 0.0)
    out = []
    for i, j in zip(nz[:-1], nz[1:]):
        if np.sign(f[i]) != np.sign(f[j]):
            out.append((float(ts[i]), float(ts[j])))
    return out


def _bisect(params, a, b):
    fa = capacity_closed(params.at(a)) - 1.0
    mid = 0.5 * (a + b)
    for _ in range(BISECTION_MAX_ITER):
        mid = 0.5 * (a + b)
        fm = capacity_closed(params.at(mid)) - 1.0
        if abs(fm) <= ROOT_TOL or mid in (a, b):
            break
        if (fm > 0.0) == (fa > 0.0):
            a, fa = mid, fm
        else:
            b = mid
    return mid


def critical_temperature(params, t_lo=1e-3, t_hi=20.0, resolution=SCAN_RESOLUTION):
    """Smallest T in [t_lo, t_hi] with chi(T) = 1, or None if chi - 1 keeps its sign."""
    intervals = sign_change_intervals(params, t_lo, t_hi, resolution)
    if not intervals:
        return None
    return _bisect(params, *intervals[0])


def critical_temperatures(params, t_lo=1e-3, t_hi=20.0, resolution=SCAN_RESOLUTION):
    return [_bisect(params, a, b) for a, b in sign_change_intervals(params, t_lo, t_hi, resolution)]
