"""Dense complex linear algebra shared by all the channel tests.

The Hermitian eigensolver is a self-contained cyclic Jacobi iteration; the
hot sweep loop lives in the compiled ``_jacobi`` extension with a numpy
fallback in ``_jacobi_py``.  Set ``QUDITCP_PURE_PYTHON=1`` to force the
fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

HERMITICITY_TOL = 1e-10
DEFAULT_EIG_TOL = 1e-12
MAX_SWEEPS = 100

if os.environ.get("QUDITCP_PURE_PYTHON"):
    from . import _jacobi_py as _kernel

    JACOBI_BACKEND = "python"
else:
    try:
        from . import _jacobi as _kernel  # type: ignore[no-redef]

        JACOBI_BACKEND = "cython"
    except ImportError:  # extension not built
        from . import _jacobi_py as _kernel  # type: ignore[no-redef]

        JACOBI_BACKEND = "python"


class ConvergenceError(RuntimeError):
    """Jacobi iteration failed to reach the requested off-diagonal mass."""


@dataclass(frozen=True)
class EigenSystem:
    """Eigenvalues (ascending) and matching orthonormal eigenvector columns."""

    values: np.ndarray
    vectors: np.ndarray


def as_square(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = as_square(a)
    b = as_square(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a @ b


def dagger(a: np.ndarray) -> np.ndarray:
    return np.asarray(a, dtype=complex).conj().T


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def hermiticity_defect(a: np.ndarray) -> float:
    a = as_square(a)
    return float(np.max(np.abs(a - a.conj().T)))


def require_hermitian(a: np.ndarray, tol: float = HERMITICITY_TOL) -> np.ndarray:
    a = as_square(a)
    defect = hermiticity_defect(a)
    if defect > tol:
        raise ValueError(f"matrix is not Hermitian: max asymmetry {defect:.3e}")
    return a


def hermitian_eigensystem(a: np.ndarray, tol: float = DEFAULT_EIG_TOL) -> EigenSystem:
    """Full eigensystem of a Hermitian matrix via cyclic Jacobi rotations.

    Raises ``ValueError`` on non-Hermitian input and ``ConvergenceError`` if
    the off-diagonal Frobenius mass is still above ``tol`` after
    ``MAX_SWEEPS`` sweeps.
    """
    a = require_hermitian(a)
    work = np.ascontiguousarray(a, dtype=np.complex128).copy()
    vec = np.eye(work.shape[0], dtype=np.complex128)
    sweeps = _kernel.jacobi_sweeps(work, vec, float(tol), MAX_SWEEPS)
    if sweeps < 0:
        raise ConvergenceError(
            f"Jacobi iteration did not converge after {MAX_SWEEPS} sweeps"
        )
    values = np.diagonal(work).real.copy()
    order = np.argsort(values, kind="stable")
    return EigenSystem(values=values[order], vectors=vec[:, order])


def min_eigenvalue(a: np.ndarray) -> float:
    return float(hermitian_eigensystem(a, tol=DEFAULT_EIG_TOL).values[0])
