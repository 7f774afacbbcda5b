"""Complete-positivity verdicts.

Two routes are implemented and cross-checked against each other: the Fourier
spectral condition (the mu vector, a Fourier pairing of the scaling vector,
must be nonnegative; valid for unital channels) and the direct
Choi-eigenvalue test (valid for all channels).  Verdicts are trinary: a margin within +-tolerance of zero is
reported as a boundary case rather than flapping between cp/not_cp.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import linalg, pauli
from .channel import AffineChannel, choi, require_valid

DEFAULT_TOLERANCE = 1e-9

VERDICT_CP = "cp"
VERDICT_NOT_CP = "not_cp"
VERDICT_BOUNDARY = "boundary"

METHOD_QFT = "qft-spectral"
METHOD_CHOI = "choi-eigen"
METHOD_BOUND = "sufficient-bound"


@dataclass(frozen=True)
class CPReport:
    verdict: str
    method: str
    spectrum: np.ndarray  # ascending
    margin: float
    tolerance: float

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "method": self.method,
            "spectrum": [float(x) for x in self.spectrum],
            "margin": float(self.margin),
            "tolerance": float(self.tolerance),
        }


def verdict_from_margin(margin: float, tolerance: float) -> str:
    if abs(margin) < tolerance:
        return VERDICT_BOUNDARY
    return VERDICT_CP if margin >= tolerance else VERDICT_NOT_CP


@lru_cache(maxsize=None)
def fourier_pair(d: int, n: int = 1) -> np.ndarray:
    """Fourier pair acting on coefficient vectors, one block per tensor factor.

    The block realizes the spectral map mu_{s,t} = (1/d) sum_{m,n}
    omega^(n*t - s*m) lambda_{m,n} (before the overall 1/d of mu_vector),
    which pairs index (s,t) with the common eigenvector at the same index.
    """
    f = pauli.qft(d)
    block = np.kron(f.conj().T, f)
    out = block
    for _ in range(n - 1):
        out = np.kron(out, block)
    out.setflags(write=False)
    return out


def mu_vector(lam: np.ndarray, d: int, n: int = 1) -> np.ndarray:
    """Choi spectrum of the unital channel: mu_{s,t} = (1/d^2) sum omega^(nt-sm) lambda_{m,n}.

    The Hermiticity constraint on lambda forces mu to be real; residual
    imaginary parts above 1e-10 signal an invalid input and raise.
    """
    lam = np.asarray(lam, dtype=complex)
    mu = fourier_pair(d, n) @ lam / d**n
    worst = float(np.max(np.abs(mu.imag)))
    if worst > 1e-10:
        raise ValueError(
            f"lambda violates the conjugate-pair constraint: max |Im mu| = {worst:.3e}"
        )
    return mu.real.copy()


def check_cp_qft(ch: AffineChannel, tolerance: float = DEFAULT_TOLERANCE) -> CPReport:
    """Spectral CP test for unital channels: CP iff mu >= 0."""
    require_valid(ch)
    if not ch.is_unital:
        raise ValueError("channel is not unital: use check_cp_choi")
    mu = np.sort(mu_vector(ch.lam, ch.d, ch.n))
    return CPReport(
        verdict=verdict_from_margin(float(mu[0]), tolerance),
        method=METHOD_QFT,
        spectrum=mu,
        margin=float(mu[0]),
        tolerance=tolerance,
    )


def check_cp_choi(ch: AffineChannel, tolerance: float = DEFAULT_TOLERANCE) -> CPReport:
    """Direct Choi-eigenvalue CP test (unital or not)."""
    spectrum = linalg.hermitian_eigensystem(choi(ch)).values
    return CPReport(
        verdict=verdict_from_margin(float(spectrum[0]), tolerance),
        method=METHOD_CHOI,
        spectrum=spectrum,
        margin=float(spectrum[0]),
        tolerance=tolerance,
    )


def sufficient_displacement_bound(ch: AffineChannel) -> tuple[float, bool]:
    """Displacement bound ||c|| <= mu_min: sufficient (not necessary) for CP.

    Returns (mu_min, applies).  When applies is True the channel is CP.
    """
    require_valid(ch)
    if ch.n != 1:
        raise ValueError("displacement bound is defined for a single qudit")
    mu_min = float(np.min(mu_vector(ch.lam, ch.d, ch.n)))
    c_norm = float(np.linalg.norm(ch.displacement()))
    return mu_min, c_norm <= mu_min


def depolarizing_channel(d: int, p: float, n: int = 1) -> AffineChannel:
    """Uniform shrink: lambda = p on every non-identity axis."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    lam = np.full(d ** (2 * n), complex(p))
    lam[0] = 1.0
    return AffineChannel(d=d, n=n, lam=lam)


def depolarizing_cp_range(d: int) -> tuple[float, float]:
    """CP parameter window (-1/(d^2-1), 1) of the depolarizing family."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    return (-1.0 / (d * d - 1), 1.0)


def unot_fidelity(d: int) -> float:
    """Orthogonal-state fidelity d/(d^2-1) of the best CP inverter."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    return d / (d * d - 1.0)


def qubit_inequalities(lam: np.ndarray) -> np.ndarray:
    """The four explicit qubit CP inequalities 1 +- l01 +- l10 +- l11.

    Row order matches the (s,t) index order of mu; the values equal 4*mu.
    """
    lam = np.asarray(lam)
    if lam.shape != (4,):
        raise ValueError(f"expected a length-4 lambda, got shape {lam.shape}")
    if np.max(np.abs(np.asarray(lam, dtype=complex).imag)) > 1e-12:
        raise ValueError("qubit lambda must be real")
    lam = lam.real.astype(float)
    if abs(lam[0] - 1) > 1e-12:
        raise ValueError(f"lambda[0,0] must be 1, got {lam[0]}")
    signs = np.array(
        [
            [1, 1, 1],
            [-1, 1, -1],
            [1, -1, -1],
            [-1, -1, 1],
        ],
        dtype=float,
    )
    return 1.0 + signs @ lam[1:]
