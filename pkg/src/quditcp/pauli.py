"""Generalized Pauli basis sigma_{p,q} = X^p Z^q on d levels.

X is the cyclic shift (|k> -> |k+1 mod d>), Z the phase diagonal with
omega = exp(-2*pi*i/d).  The Fourier matrix uses the matching phase sign,
F[k,j] = omega^(j*k)/sqrt(d); this is the unique pairing under which
F^dag Z^k F = X^k holds, and it must not be changed independently.

Index bookkeeping is exact: group-law phases are integer exponents of omega,
floating point enters only when explicit matrices are built.  Linear index
convention is (p, q) -> p*d + q, most-significant tensor factor first for
multi-qudit coefficient vectors.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache

import numpy as np


def omega(d: int) -> complex:
    """Primitive d-th root of unity exp(-2*pi*i/d)."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    return cmath.exp(-2j * cmath.pi / d)


@dataclass(frozen=True)
class PauliIndex:
    p: int
    q: int
    d: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"dimension must be >= 2, got {self.d}")
        if not (0 <= self.p < self.d and 0 <= self.q < self.d):
            raise ValueError(f"index ({self.p},{self.q}) out of range for d={self.d}")


@dataclass(frozen=True)
class PauliProduct:
    """omega^phase_exponent * sigma_index, with the phase kept exact."""

    phase_exponent: int
    index: PauliIndex

    @property
    def phase(self) -> complex:
        return omega(self.index.d) ** self.phase_exponent


@lru_cache(maxsize=None)
def _sigma(d: int, p: int, q: int) -> np.ndarray:
    w = omega(d)
    m = np.zeros((d, d), dtype=complex)
    for k in range(d):
        m[(k + p) % d, k] = w ** (q * k)
    m.setflags(write=False)
    return m


def sigma(idx: PauliIndex) -> np.ndarray:
    """Matrix of X^p Z^q in the computational basis."""
    return _sigma(idx.d, idx.p, idx.q)


def sigma_matrix(d: int, p: int, q: int) -> np.ndarray:
    return _sigma(d, p % d, q % d)


def multiply_indices(a: PauliIndex, b: PauliIndex) -> PauliProduct:
    """Group law: sigma_a * sigma_b = omega^(b.p * a.q) * sigma_{a+b}."""
    if a.d != b.d:
        raise ValueError(f"dimension mismatch: {a.d} vs {b.d}")
    d = a.d
    return PauliProduct(
        phase_exponent=(b.p * a.q) % d,
        index=PauliIndex((a.p + b.p) % d, (a.q + b.q) % d, d),
    )


def adjoint_index(a: PauliIndex) -> PauliProduct:
    """sigma_{p,q}^dag = omega^(p*q) * sigma_{-p,-q}."""
    d = a.d
    return PauliProduct(
        phase_exponent=(a.p * a.q) % d,
        index=PauliIndex((d - a.p) % d, (d - a.q) % d, d),
    )


@lru_cache(maxsize=None)
def qft(d: int) -> np.ndarray:
    """Fourier matrix F[k,j] = omega^(j*k)/sqrt(d), so that F^dag Z^k F = X^k."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    k = np.arange(d)
    f = np.exp(-2j * np.pi * np.outer(k, k) / d) / np.sqrt(d)
    f.setflags(write=False)
    return f


def expand(a: np.ndarray) -> np.ndarray:
    """Coefficients of A in the sigma basis: coeff[p*d+q] = tr(sigma^dag A)/d."""
    a = np.asarray(a, dtype=complex)
    d = a.shape[0]
    coeffs = np.empty(d * d, dtype=complex)
    for p in range(d):
        for q in range(d):
            coeffs[p * d + q] = np.trace(_sigma(d, p, q).conj().T @ a) / d
    return coeffs


def reconstruct(coeffs: np.ndarray, d: int) -> np.ndarray:
    """Inverse of :func:`expand`: sum coeff[p*d+q] * sigma_{p,q}."""
    a = np.zeros((d, d), dtype=complex)
    for p in range(d):
        for q in range(d):
            a += coeffs[p * d + q] * _sigma(d, p, q)
    return a


# -- multi-qudit coefficient bookkeeping -------------------------------------
#
# A length-d^(2N) vector indexes the product basis pi_{i,j} = sigma_{i1,j1}
# (x) ... (x) sigma_{iN,jN}, linear index = sum_k (i_k*d + j_k) * d^(2(N-k-1)).


def index_digits(idx: int, d: int, n: int) -> list[tuple[int, int]]:
    digits = []
    for k in range(n):
        block = (idx // d ** (2 * (n - k - 1))) % (d * d)
        digits.append((block // d, block % d))
    return digits


def digits_index(digits: list[tuple[int, int]], d: int) -> int:
    idx = 0
    for p, q in digits:
        idx = idx * d * d + p * d + q
    return idx


@lru_cache(maxsize=None)
def basis_matrices(d: int, n: int) -> tuple[np.ndarray, ...]:
    """All d^(2n) product-basis matrices pi_{i,j}, in linear-index order."""
    if n == 1:
        return tuple(_sigma(d, p, q) for p in range(d) for q in range(d))
    out = []
    for idx in range(d ** (2 * n)):
        digits = index_digits(idx, d, n)
        m = _sigma(d, *digits[0])
        for p, q in digits[1:]:
            m = np.kron(m, _sigma(d, p, q))
        m.setflags(write=False)
        out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def negate_perm(d: int, n: int) -> np.ndarray:
    """Permutation sending linear index of (i, j) to that of (-i, -j)."""
    perm = np.empty(d ** (2 * n), dtype=np.intp)
    for idx in range(perm.size):
        digits = [((d - p) % d, (d - q) % d) for p, q in index_digits(idx, d, n)]
        perm[idx] = digits_index(digits, d)
    return perm


@lru_cache(maxsize=None)
def negate_q_perm(d: int, n: int) -> np.ndarray:
    """Permutation sending linear index of (i, j) to that of (i, -j)."""
    perm = np.empty(d ** (2 * n), dtype=np.intp)
    for idx in range(perm.size):
        digits = [(p, (d - q) % d) for p, q in index_digits(idx, d, n)]
        perm[idx] = digits_index(digits, d)
    return perm


@lru_cache(maxsize=None)
def phase_exponents(d: int, n: int) -> np.ndarray:
    """(sum_k p_k*q_k) mod d per linear index; exponent of omega in the
    Hermiticity constraints."""
    exps = np.empty(d ** (2 * n), dtype=np.intp)
    for idx in range(exps.size):
        exps[idx] = sum(p * q for p, q in index_digits(idx, d, n)) % d
    return exps


def symmetrize_scaling(vec: np.ndarray, d: int, n: int = 1) -> np.ndarray:
    """Project onto the scaling-vector constraint lambda_{-p,-q} = conj(lambda_{p,q})."""
    vec = np.asarray(vec, dtype=complex)
    return (vec + vec[negate_perm(d, n)].conj()) / 2


def symmetrize_hermitian(vec: np.ndarray, d: int, n: int = 1) -> np.ndarray:
    """Project onto the coefficient constraint making vec . sigma Hermitian:
    conj(r_{p,q}) = omega^{-pq} r_{-p,-q}."""
    vec = np.asarray(vec, dtype=complex)
    ph = omega(d) ** phase_exponents(d, n)
    return (vec + ph * vec[negate_perm(d, n)].conj()) / 2


def scaling_constraint_defect(vec: np.ndarray, d: int, n: int = 1) -> float:
    vec = np.asarray(vec, dtype=complex)
    return float(np.max(np.abs(vec - vec[negate_perm(d, n)].conj())))


def hermitian_constraint_defect(vec: np.ndarray, d: int, n: int = 1) -> float:
    vec = np.asarray(vec, dtype=complex)
    ph = omega(d) ** phase_exponents(d, n)
    return float(np.max(np.abs(vec - ph * vec[negate_perm(d, n)].conj())))
