"""Complete-positivity checks for affine maps on generalized Bloch vectors."""

from .channel import (
    AffineChannel,
    NonPositiveOutputWarning,
    apply,
    choi,
    choi_eigenvectors,
    kraus_from_choi,
    validate,
)
from .cp import (
    CPReport,
    check_cp_choi,
    check_cp_qft,
    depolarizing_channel,
    depolarizing_cp_range,
    mu_vector,
    qubit_inequalities,
    sufficient_displacement_bound,
    unot_fidelity,
)
from .linalg import (
    JACOBI_BACKEND,
    EigenSystem,
    dagger,
    hermitian_eigensystem,
    matmul,
    min_eigenvalue,
    tensor,
)
from .pauli import PauliIndex, PauliProduct, adjoint_index, expand, multiply_indices, omega, qft, sigma
from .sdp import FeasibilityProblem, RayResult, feasible, lambda_from_mu, max_ray_parameter, max_uniform_shift
from .state import BlochVector, bloch_from_density, density_from_bloch, is_valid_bloch

__version__ = "0.1.0"

__all__ = [
    "AffineChannel",
    "BlochVector",
    "CPReport",
    "EigenSystem",
    "FeasibilityProblem",
    "JACOBI_BACKEND",
    "NonPositiveOutputWarning",
    "PauliIndex",
    "PauliProduct",
    "RayResult",
    "adjoint_index",
    "apply",
    "bloch_from_density",
    "check_cp_choi",
    "check_cp_qft",
    "choi",
    "choi_eigenvectors",
    "dagger",
    "density_from_bloch",
    "depolarizing_channel",
    "depolarizing_cp_range",
    "expand",
    "feasible",
    "hermitian_eigensystem",
    "is_valid_bloch",
    "kraus_from_choi",
    "lambda_from_mu",
    "matmul",
    "max_ray_parameter",
    "max_uniform_shift",
    "min_eigenvalue",
    "mu_vector",
    "multiply_indices",
    "omega",
    "qft",
    "qubit_inequalities",
    "sigma",
    "sufficient_displacement_bound",
    "tensor",
    "unot_fidelity",
    "validate",
]
