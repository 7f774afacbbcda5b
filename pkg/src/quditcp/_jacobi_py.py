"""Pure-Python fallback for the Jacobi kernel (numpy row/column updates).

Same contract as the compiled ``_jacobi`` extension: diagonalize a Hermitian
matrix in place by cyclic complex Jacobi rotations, accumulating the rotations
into ``v``.  Selected automatically when the extension is unavailable or when
``QUDITCP_PURE_PYTHON`` is set.
"""

from __future__ import annotations

import math

import numpy as np


def _off_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diagonal(a))))


def jacobi_sweeps(a: np.ndarray, v: np.ndarray, tol: float, max_sweeps: int) -> int:
    n = a.shape[0]
    target = max(tol, n * 2.2e-16 * float(np.linalg.norm(a)))
    skip = target / (2.0 * n)

    if _off_norm(a) <= target:
        return 0

    for sweep in range(1, max_sweeps + 1):
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= skip:
                    continue
                phi = 0.5 * math.atan2(2.0 * mag, a[q, q].real - a[p, p].real)
                c = math.cos(phi)
                s = math.sin(phi)
                u = apq.conjugate() / mag
                uc = u.conjugate()
                rp = c * a[p, :] - s * uc * a[q, :]
                rq = s * a[p, :] + c * uc * a[q, :]
                a[p, :] = rp
                a[q, :] = rq
                cp_ = c * a[:, p] - s * u * a[:, q]
                cq = s * a[:, p] + c * u * a[:, q]
                a[:, p] = cp_
                a[:, q] = cq
                vp = c * v[:, p] - s * u * v[:, q]
                vq = s * v[:, p] + c * u * v[:, q]
                v[:, p] = vp
                v[:, q] = vq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
        if _off_norm(a) <= target:
            return sweep
    return -1
