"""Density matrices and their generalized Bloch-vector representation.

A state rho on (C^d)^(x)N is encoded by the length-d^(2N) coefficient vector
r with r[idx] = tr(pi_idx^dag rho), so that rho = sum r[idx] pi_idx / d^N.
Valid states have r[0] = 1, satisfy the Hermiticity constraint
conj(r_{p,q}) = omega^{-pq} r_{-p,-q}, and reconstruct to a PSD matrix.
Norm alone never decides validity (the Bloch body is not a ball for d > 2);
the PSD check on the reconstruction is the arbiter.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg, pauli

TRACE_TOL = 1e-10
PSD_TOL = 1e-9


@dataclass(frozen=True)
class BlochVector:
    d: int
    n: int
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=complex)
        object.__setattr__(self, "coeffs", coeffs)
        if self.d < 2 or self.n < 1:
            raise ValueError(f"bad dimensions d={self.d}, n={self.n}")
        if coeffs.shape != (self.d ** (2 * self.n),):
            raise ValueError(
                f"coefficient vector must have length {self.d ** (2 * self.n)}, "
                f"got {coeffs.shape}"
            )

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "bloch": [[z.real, z.imag] for z in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "BlochVector":
        coeffs = np.array([complex(re, im) for re, im in obj["bloch"]])
        return cls(d=int(obj["d"]), n=int(obj["n"]), coeffs=coeffs)


def validate_density(rho: np.ndarray) -> None:
    """Raise ValueError naming the first failing state invariant."""
    rho = linalg.as_square(rho)
    defect = linalg.hermiticity_defect(rho)
    if defect > linalg.HERMITICITY_TOL:
        raise ValueError(f"density matrix not Hermitian: max asymmetry {defect:.3e}")
    tr = complex(np.trace(rho))
    if abs(tr - 1) > TRACE_TOL:
        raise ValueError(f"density matrix trace {tr} != 1")
    lo = linalg.min_eigenvalue(rho)
    if lo < -PSD_TOL:
        raise ValueError(f"density matrix not PSD: min eigenvalue {lo:.3e}")


def bloch_from_density(rho: np.ndarray, d: int, n: int = 1) -> BlochVector:
    """Coefficient vector r[idx] = tr(pi_idx^dag rho)."""
    rho = linalg.as_square(rho)
    if rho.shape[0] != d**n:
        raise ValueError(f"matrix dim {rho.shape[0]} != d^n = {d ** n}")
    validate_density(rho)
    basis = pauli.basis_matrices(d, n)
    coeffs = np.array([np.trace(b.conj().T @ rho) for b in basis])
    return BlochVector(d=d, n=n, coeffs=coeffs)


def _reconstruct(r: BlochVector) -> np.ndarray:
    basis = pauli.basis_matrices(r.d, r.n)
    dim = r.d**r.n
    rho = np.zeros((dim, dim), dtype=complex)
    for c, b in zip(r.coeffs, basis):
        rho += c * b
    return rho / dim


def density_from_bloch(r: BlochVector) -> np.ndarray:
    """rho = sum r[idx] pi_idx / d^N, with validity enforced."""
    if abs(r.coeffs[0] - 1) > TRACE_TOL:
        raise ValueError(f"r[0,0] = {r.coeffs[0]} != 1")
    defect = pauli.hermitian_constraint_defect(r.coeffs, r.d, r.n)
    if defect > linalg.HERMITICITY_TOL:
        raise ValueError(f"Hermiticity constraint violated by {defect:.3e}")
    rho = _reconstruct(r)
    lo = linalg.min_eigenvalue(rho)
    if lo < -PSD_TOL:
        raise ValueError(f"not a state: min eigenvalue {lo:.3e}")
    return rho


def is_valid_bloch(r: BlochVector) -> tuple[bool, list[str]]:
    """PSD-reconstruction validity check with per-condition diagnostics."""
    diagnostics = []
    if abs(r.coeffs[0] - 1) > TRACE_TOL:
        diagnostics.append(f"r00!=1 (got {r.coeffs[0]})")
    defect = pauli.hermitian_constraint_defect(r.coeffs, r.d, r.n)
    if defect > linalg.HERMITICITY_TOL:
        diagnostics.append(f"hermiticity constraint violated by {defect:.3e}")
    if not diagnostics:
        lo = linalg.min_eigenvalue(_reconstruct(r))
        if lo < -PSD_TOL:
            diagnostics.append(f"not PSD (min eigenvalue {lo:.3e})")
    return (not diagnostics, diagnostics)
