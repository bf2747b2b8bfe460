"""Time the kernels with numba against the plain path (DENSECAP_NO_NUMBA=1).

    python benchmarks/bench_kernels.py [--n 2000]

Each path runs in its own interpreter because the flag is read at import.
"""
import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np


def random_states(n, seed=0):
    rng = np.random.default_rng(seed)
    g = rng.normal(size=(n, 4, 4)) + 1j * rng.normal(size=(n, 4, 4))
    rho = g @ np.conj(np.swapaxes(g, 1, 2))
    return rho / np.trace(rho, axis1=1, axis2=2).real[:, None, None]


def thermal_states(n, seed=0):
    from densecap.spinmodels import ModelParams, thermal_state

    rng = np.random.default_rng(seed)
    out = np.empty((n, 4, 4), dtype=np.complex128)
    for k in range(n):
        kind = "xxz" if k % 2 else "dm"
        out[k] = thermal_state(ModelParams(kind, rng.uniform(-2, 2), rng.uniform(-3, 3), rng.uniform(0.05, 2))).rho
    return out


def worker(n):
    from densecap import _jit, _kernels

    result = {"numba": _jit.ENABLED}
    for label, rhos in (("thermal", thermal_states(n)), ("dense", random_states(n))):
        for name in ("batch_entropy_bits", "batch_concurrence"):
            kernel = getattr(_kernels, name)
            kernel(rhos[:2])  # compile or load cache
            best = float("inf")
            for _ in range(3 if _jit.ENABLED else 1):
                t0 = time.perf_counter()
                values = kernel(rhos)
                best = min(best, time.perf_counter() - t0)
            result[f"{label}/{name}"] = {"seconds": best, "checksum": float(np.sum(values))}
    print(json.dumps(result))


def spawn(n, disable):
    env = dict(os.environ, DENSECAP_NO_NUMBA="1" if disable else "0")
    out = subprocess.run(
        [sys.executable, __file__, "--worker", "--n", str(n)], env=env, capture_output=True, text=True, check=True
    )
    return json.loads(out.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=2000)
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.worker:
        worker(args.n)
        return
    fast = spawn(args.n, disable=False)
    plain = spawn(args.n, disable=True)
    if not fast.pop("numba"):
        print("numba unavailable; both runs used the plain path")
    plain.pop("numba")
    for key in fast:
        f, p = fast[key], plain[key]
        agree = abs(f["checksum"] - p["checksum"]) <= 1e-9 * args.n
        print(
            f"{key:32s} n={args.n:6d}  plain {p['seconds'] * 1e3:9.1f} ms  numba {f['seconds'] * 1e3:8.2f} ms"
            f"  speedup {p['seconds'] / f['seconds']:7.1f}x  {'agree' if agree else 'MISMATCH'}"
        )


if __name__ == "__main__":
    main()
