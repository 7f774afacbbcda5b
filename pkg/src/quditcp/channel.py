"""Affine channels with diagonal scaling vector and displacement.

The map acts on Bloch coefficients as r'_{p,q} = lambda_{p,q} r_{p,q} +
c_{p,q} r_{0,0}.  Trace preservation pins lambda at the identity slot to 1
and c at the identity slot to 0.  Hermiticity preservation requires
lambda_{-p,-q} = conj(lambda_{p,q}) and c . sigma Hermitian.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from . import linalg, pauli, state

CONSTRAINT_TOL = 1e-10
PSD_TOL = 1e-9


class NonPositiveOutputWarning(RuntimeWarning):
    """apply() produced a non-PSD matrix (the channel is not CP)."""


@dataclass(frozen=True)
class AffineChannel:
    d: int
    n: int
    lam: np.ndarray
    c: np.ndarray | None = field(default=None)

    def __post_init__(self):
        lam = np.asarray(self.lam, dtype=complex)
        object.__setattr__(self, "lam", lam)
        size = self.d ** (2 * self.n)
        if self.d < 2 or self.n < 1:
            raise ValueError(f"bad dimensions d={self.d}, n={self.n}")
        if lam.shape != (size,):
            raise ValueError(f"lambda must have length {size}, got {lam.shape}")
        c = self.c
        if c is not None:
            c = np.asarray(c, dtype=complex)
            if c.shape != (size,):
                raise ValueError(f"c must have length {size}, got {c.shape}")
            if not c.any():
                c = None
        object.__setattr__(self, "c", c)

    @property
    def dim(self) -> int:
        """Hilbert-space dimension d^n."""
        return self.d**self.n

    @property
    def size(self) -> int:
        """Coefficient-vector length d^(2n)."""
        return self.d ** (2 * self.n)

    @property
    def is_unital(self) -> bool:
        return self.c is None

    def displacement(self) -> np.ndarray:
        return np.zeros(self.size, dtype=complex) if self.c is None else self.c

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "lambda": [[z.real, z.imag] for z in self.lam],
            "c": None if self.c is None else [[z.real, z.imag] for z in self.c],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "AffineChannel":
        lam = np.array([complex(re, im) for re, im in obj["lambda"]])
        c = obj.get("c")
        if c is not None:
            c = np.array([complex(re, im) for re, im in c])
        return cls(d=int(obj["d"]), n=int(obj["n"]), lam=lam, c=c)


def validate(ch: AffineChannel) -> dict[str, tuple[bool, str]]:
    """Per-condition pass/fail diagnostics for the channel invariants."""
    checks: dict[str, tuple[bool, str]] = {}

    dev = abs(ch.lam[0] - 1)
    checks["lambda00_is_one"] = (dev <= CONSTRAINT_TOL, f"|lambda[0,0]-1| = {dev:.3e}")

    defect = pauli.scaling_constraint_defect(ch.lam, ch.d, ch.n)
    checks["lambda_conjugate_pairs"] = (
        defect <= CONSTRAINT_TOL,
        f"max |lambda_pq - conj(lambda_-p-q)| = {defect:.3e}",
    )

    if ch.c is None:
        checks["displacement_hermitian"] = (True, "unital (c = 0)")
    else:
        dev0 = abs(ch.c[0])
        cdef = pauli.hermitian_constraint_defect(ch.c, ch.d, ch.n)
        ok = dev0 <= CONSTRAINT_TOL and cdef <= CONSTRAINT_TOL
        checks["displacement_hermitian"] = (
            ok,
            f"|c[0,0]| = {dev0:.3e}, c.sigma Hermitian defect = {cdef:.3e}",
        )
    return checks


def require_valid(ch: AffineChannel) -> None:
    for name, (ok, detail) in validate(ch).items():
        if not ok:
            raise ValueError(f"invalid channel: {name} failed ({detail})")


def apply(ch: AffineChannel, rho: np.ndarray, d: int | None = None, n: int | None = None) -> np.ndarray:
    """Push a density matrix through the channel.

    The output can be non-PSD when the channel is not CP; in that case a
    NonPositiveOutputWarning is issued and the matrix returned as-is.
    """
    require_valid(ch)
    if d is not None and (d != ch.d or (n or 1) != ch.n):
        raise ValueError(f"state dims (d={d}, n={n}) do not match channel")
    r = state.bloch_from_density(rho, ch.d, ch.n)
    out = ch.lam * r.coeffs
    if ch.c is not None:
        out = out + ch.c  # r[0,0] = 1
    basis = pauli.basis_matrices(ch.d, ch.n)
    dim = ch.dim
    rho_out = np.zeros((dim, dim), dtype=complex)
    for coeff, b in zip(out, basis):
        rho_out += coeff * b
    rho_out /= dim
    if linalg.min_eigenvalue(rho_out) < -PSD_TOL:
        warnings.warn(
            "channel output is not positive semidefinite (map is not CP)",
            NonPositiveOutputWarning,
            stacklevel=2,
        )
    return rho_out


def choi(ch: AffineChannel) -> np.ndarray:
    """Choi operator (I (x) E)(|alpha><alpha|), ancilla index major.

    Equals (1/D^2) [ I (x) c.pi + sum_{i,j} lambda_{i,j} pi_{i,-j} (x) pi_{i,j} ]
    with D = d^n.  Trace 1 for trace-preserving channels.
    """
    require_valid(ch)
    if ch.n > 1 and ch.c is not None:
        raise ValueError("non-unital channels are only supported for a single qudit")
    d, n = ch.d, ch.n
    dim = ch.dim
    basis = pauli.basis_matrices(d, n)
    flip = pauli.negate_q_perm(d, n)
    acc = np.zeros((dim * dim, dim * dim), dtype=complex)
    for idx in range(ch.size):
        acc += ch.lam[idx] * np.kron(basis[flip[idx]], basis[idx])
    if ch.c is not None:
        c_sigma = np.zeros((dim, dim), dtype=complex)
        for idx in range(ch.size):
            c_sigma += ch.c[idx] * basis[idx]
        acc += np.kron(np.eye(dim), c_sigma)
    return acc / (dim * dim)


def choi_eigenvectors(d: int, n: int = 1) -> np.ndarray:
    """Common eigenvector columns |Phi_{s,t}> of every pi_{i,-j} (x) pi_{i,j}.

    Column at linear index of (s, t) is (1/sqrt(D)) sum_k |k> (x) Pi_{t,s}|k>;
    the columns form an orthonormal basis and simultaneously diagonalize all
    Choi operators of unital channels.
    """
    dim = d**n
    size = d ** (2 * n)
    basis = pauli.basis_matrices(d, n)
    u = np.zeros((dim * dim, size), dtype=complex)
    for idx in range(size):
        digits = pauli.index_digits(idx, d, n)
        swapped = pauli.digits_index([(t, s) for s, t in digits], d)
        m = basis[swapped]  # Pi_{t,s}
        for k in range(dim):
            u[k * dim : (k + 1) * dim, idx] = m[:, k]
    return u / np.sqrt(dim)


def kraus_from_choi(
    choi_mat: np.ndarray, d: int, n: int = 1, rank_tol: float = 1e-12
) -> tuple[list[np.ndarray], float]:
    """Operator-sum form from a PSD Choi matrix.

    Returns (kraus_ops, completeness_residual) where the residual is
    max-entry of |sum A_k^dag A_k - I|.  Raises ValueError when the Choi
    matrix has an eigenvalue below -1e-9 (no Kraus form exists).
    """
    dim = d**n
    eig = linalg.hermitian_eigensystem(choi_mat)
    if eig.values[0] < -PSD_TOL:
        raise ValueError(
            f"not CP, no Kraus form: min Choi eigenvalue {eig.values[0]:.3e}"
        )
    ops = []
    for k in range(eig.values.size):
        mu = eig.values[k]
        if mu <= rank_tol:
            continue
        vec = eig.vectors[:, k]
        a = np.sqrt(dim * mu) * vec.reshape(dim, dim).T  # ancilla index -> columns
        # fix the free global phase: first significant entry real-positive
        flat = a.ravel()
        lead = flat[np.abs(flat) > 1e-12][0]
        a = a * (abs(lead) / lead)
        ops.append(a)
    total = sum(a.conj().T @ a for a in ops)
    residual = float(np.max(np.abs(total - np.eye(dim))))
    return ops, residual
