"""Compare the compiled and pure-Python Jacobi eigensolver backends.

Times full eigendecompositions of random Hermitian matrices at the sizes
that actually occur in channel checks (d^2 x d^2 for one qudit, d^(2N) for
two), and checks both backends agree with numpy. Run from the repo root:

    python3 benchmarks/bench_eigensolver.py
"""

import time

import numpy as np

from quditcp import _jacobi_py
from quditcp.linalg import JACOBI_BACKEND, MAX_SWEEPS

try:
    from quditcp import _jacobi as _jacobi_ext
except ImportError:
    _jacobi_ext = None

SIZES = [4, 9, 16, 25, 81]
REPEATS = {4: 400, 9: 200, 16: 100, 25: 50, 81: 10}
TOL = 1e-12


def random_hermitian(rng, n):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (g + g.conj().T) / 2


def run_backend(sweeps_fn, mats):
    best = float("inf")
    for _ in range(3):
        start = time.perf_counter()
        for m in mats:
            a = np.array(m, order="C")
            v = np.eye(a.shape[0], dtype=complex)
            sweeps_fn(a, v, TOL, MAX_SWEEPS)
        best = min(best, time.perf_counter() - start)
    return best / len(mats)


def main():
    rng = np.random.default_rng(7)
    print(f"selected backend at import: {JACOBI_BACKEND}")
    print(f"{'size':>6} {'python (ms)':>12} {'cython (ms)':>12} {'speedup':>8}  agreement")
    for n in SIZES:
        mats = [random_hermitian(rng, n) for _ in range(REPEATS[n])]
        t_py = run_backend(_jacobi_py.jacobi_sweeps, mats)

        a = np.array(mats[0], order="C")
        v = np.eye(n, dtype=complex)
        _jacobi_py.jacobi_sweeps(a, v, TOL, MAX_SWEEPS)
        gap = np.max(np.abs(np.sort(np.diag(a).real) - np.linalg.eigvalsh(mats[0])))

        if _jacobi_ext is None:
            print(f"{n:>6} {t_py * 1e3:>12.3f} {'n/a':>12} {'n/a':>8}  vs numpy {gap:.1e}")
            continue
        t_cy = run_backend(_jacobi_ext.jacobi_sweeps, mats)
        a = np.array(mats[0], order="C")
        v = np.eye(n, dtype=complex)
        _jacobi_ext.jacobi_sweeps(a, v, TOL, MAX_SWEEPS)
        gap = max(gap, np.max(np.abs(np.sort(np.diag(a).real) - np.linalg.eigvalsh(mats[0]))))
        print(
            f"{n:>6} {t_py * 1e3:>12.3f} {t_cy * 1e3:>12.3f} {t_py / t_cy:>7.1f}x"
            f"  vs numpy {gap:.1e}"
        )


if __name__ == "__main__":
    main()
