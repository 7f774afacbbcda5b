import numpy as np
import pytest

from quditcp import pauli
from quditcp.channel import AffineChannel
from quditcp.sdp import lambda_from_mu


def random_complex(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_constrained_lambda(rng, d, n=1, scale=0.7):
    """Random scaling vector obeying lambda_{-p,-q} = conj(lambda_{p,q})."""
    lam = pauli.symmetrize_scaling(scale * random_complex(rng, d ** (2 * n)), d, n)
    lam[0] = 1.0
    return lam


def random_displacement(rng, d, norm=0.1):
    """Random displacement with c.sigma Hermitian and the requested norm."""
    c = pauli.symmetrize_hermitian(random_complex(rng, d * d), d)
    c[0] = 0.0
    return c * (norm / np.linalg.norm(c))


def random_cp_lambda(rng, d, n=1):
    """Scaling vector of a CP unital channel, built from a random spectrum."""
    mu = rng.random(d ** (2 * n))
    mu /= mu.sum()
    return lambda_from_mu(mu, d, n)


def random_unital(rng, d, n=1, scale=0.7):
    return AffineChannel(d=d, n=n, lam=random_constrained_lambda(rng, d, n, scale))


def random_pure_state(rng, d, n=1):
    dim = d**n
    psi = random_complex(rng, dim)
    psi /= np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def random_density(rng, d, n=1):
    dim = d**n
    g = random_complex(rng, (dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
