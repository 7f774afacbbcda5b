"""Semidefinite feasibility for the diagonal-shift form of the CP condition.

In the common eigenbasis U of the shift operators, the CP condition for a
channel with scaling lambda and displacement c becomes

    U^dag (I (x) c.sigma) U / D^2  +  diag(mu)  >=  0,

which is a fixed Hermitian part plus a candidate diagonal: exactly the
feasibility question answered here by minimum-eigenvalue evaluation.  The
problem instances in scope are single feasibility checks and one-parameter
rays, so boundaries are located by verified-bracket bisection rather than a
general-purpose SDP solver.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import linalg, pauli
from .channel import AffineChannel, choi_eigenvectors, require_valid
from .cp import DEFAULT_TOLERANCE, check_cp_choi, fourier_pair, mu_vector

FEASIBLE_TOL = 1e-9
BRACKET_WIDTH = 1e-8
MAX_BISECTIONS = 200


@dataclass(frozen=True)
class FeasibilityProblem:
    fixed_part: np.ndarray  # Hermitian
    diag_shift: np.ndarray  # real candidate diagonal


@dataclass(frozen=True)
class RayResult:
    t_max: float
    iterations: int
    bracket: tuple[float, float]
    margin_at_t_max: float

    def to_json(self) -> dict:
        return {
            "t_max": float(self.t_max),
            "iterations": int(self.iterations),
            "margin": float(self.margin_at_t_max),
        }


def feasible(p: FeasibilityProblem) -> tuple[bool, float]:
    """Is fixed_part + diag(shift) PSD?  Returns (verdict, min eigenvalue)."""
    fixed = linalg.require_hermitian(p.fixed_part)
    shift = np.asarray(p.diag_shift, dtype=float)
    if shift.shape != (fixed.shape[0],):
        raise ValueError(
            f"diagonal shift length {shift.shape} does not match matrix dim {fixed.shape[0]}"
        )
    margin = linalg.min_eigenvalue(fixed + np.diag(shift))
    return margin >= -FEASIBLE_TOL, margin


def max_uniform_shift(a: np.ndarray) -> float:
    """Smallest t with a + t*I PSD, i.e. -min_eigenvalue(a)."""
    return -linalg.min_eigenvalue(linalg.require_hermitian(a))


def choi_feasibility_problem(ch: AffineChannel) -> FeasibilityProblem:
    """Diagonal-shift form of the CP condition for a non-unital channel.

    The returned problem's margin equals the Choi minimum eigenvalue, so
    feasibility agrees with check_cp_choi at the same tolerance.
    """
    require_valid(ch)
    if ch.n != 1:
        raise ValueError("diagonal-shift reduction is defined for a single qudit")
    d = ch.d
    u = choi_eigenvectors(d)
    basis = pauli.basis_matrices(d, 1)
    c = ch.displacement()
    c_sigma = np.zeros((d, d), dtype=complex)
    for idx in range(c.size):
        c_sigma += c[idx] * basis[idx]
    fixed = u.conj().T @ np.kron(np.eye(d), c_sigma) @ u / (d * d)
    # fixed is Hermitian up to round-off; symmetrize before the eigensolver
    fixed = (fixed + fixed.conj().T) / 2
    return FeasibilityProblem(fixed_part=fixed, diag_shift=mu_vector(ch.lam, d, 1))


def lambda_from_mu(mu: np.ndarray, d: int, n: int = 1) -> np.ndarray:
    """Invert the spectral map: lambda = d^n (F^dag (x) F)^(x)n mu."""
    mu = np.asarray(mu, dtype=complex)
    size = d ** (2 * n)
    if mu.shape != (size,):
        raise ValueError(f"mu must have length {size}, got {mu.shape}")
    return d**n * (fourier_pair(d, n).conj().T @ mu)


def _ray_margin(base: AffineChannel, direction: np.ndarray, t: float) -> float:
    ch = replace(base, lam=base.lam + t * direction)
    return check_cp_choi(ch).margin


def max_ray_parameter(
    base: AffineChannel,
    direction: np.ndarray,
    t_lo: float,
    t_hi: float,
    tolerance: float = DEFAULT_TOLERANCE,
) -> RayResult:
    """Largest t in [t_lo, t_hi] keeping lambda + t*direction a CP channel.

    The bracket is verified first (CP at t_lo, not CP at t_hi); bisection
    stops when the bracket is narrower than 1e-8 or after 200 iterations.
    Only the first boundary inside the bracket is reported; the feasible set
    along an arbitrary ray is not assumed to be an interval beyond it.
    """
    require_valid(base)
    direction = np.asarray(direction, dtype=complex)
    if direction.shape != (base.size,):
        raise ValueError(
            f"direction must have length {base.size}, got {direction.shape}"
        )
    if abs(direction[0]) > 1e-12:
        raise ValueError("direction must vanish on the identity slot")
    defect = pauli.scaling_constraint_defect(direction, base.d, base.n)
    if defect > 1e-10:
        raise ValueError(
            f"direction violates the conjugate-pair constraint by {defect:.3e}"
        )
    if t_hi <= t_lo:
        raise ValueError(f"bad bracket: t_lo={t_lo} >= t_hi={t_hi}")

    lo_margin = _ray_margin(base, direction, t_lo)
    if lo_margin < -tolerance:
        raise ValueError(f"base channel not CP at t_lo: margin {lo_margin:.3e}")
    hi_margin = _ray_margin(base, direction, t_hi)
    if hi_margin >= -tolerance:
        raise ValueError(f"bracket not verified: channel still CP at t_hi={t_hi}")

    lo, hi = float(t_lo), float(t_hi)
    iterations = 0
    while hi - lo >= BRACKET_WIDTH and iterations < MAX_BISECTIONS:
        mid = (lo + hi) / 2
        if _ray_margin(base, direction, mid) >= -tolerance:
            lo = mid
        else:
            hi = mid
        iterations += 1
    return RayResult(
        t_max=lo,
        iterations=iterations,
        bracket=(lo, hi),
        margin_at_t_max=_ray_margin(base, direction, lo),
    )
