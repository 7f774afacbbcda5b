import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quditcp import pauli
from quditcp.pauli import PauliIndex, sigma_matrix

from conftest import random_complex


def all_indices(d):
    return [PauliIndex(p, q, d) for p in range(d) for q in range(d)]


class TestOmega:
    def test_qubit(self):
        assert pauli.omega(2) == pytest.approx(-1)

    def test_d4(self):
        assert pauli.omega(4) == pytest.approx(-1j)

    @pytest.mark.parametrize("d", range(2, 9))
    def test_root_of_unity(self, d):
        assert pauli.omega(d) ** d == pytest.approx(1, abs=1e-12)

    def test_rejects_small_d(self):
        with pytest.raises(ValueError):
            pauli.omega(1)


class TestSigma:
    def test_identity(self):
        assert np.allclose(pauli.sigma(PauliIndex(0, 0, 3)), np.eye(3))

    def test_qubit_x(self):
        assert np.allclose(pauli.sigma(PauliIndex(1, 0, 2)), [[0, 1], [1, 0]])

    def test_qutrit_xz(self):
        m = pauli.sigma(PauliIndex(1, 1, 3))
        w = pauli.omega(3)
        for k in range(3):
            assert m[(k + 1) % 3, k] == pytest.approx(w**k)
        assert np.count_nonzero(m) == 3

    @pytest.mark.parametrize("d", range(2, 7))
    def test_orthogonality(self, d):
        mats = [pauli.sigma(i) for i in all_indices(d)]
        for i, a in enumerate(mats):
            for j, b in enumerate(mats):
                inner = np.trace(a.conj().T @ b)
                assert inner == pytest.approx(d if i == j else 0, abs=1e-10)

    @pytest.mark.parametrize("d", range(2, 6))
    def test_hermitian_relations(self, d):
        for i in range(d):
            xi = sigma_matrix(d, i, 0)
            zi = sigma_matrix(d, 0, i)
            assert np.max(np.abs(xi.conj().T - sigma_matrix(d, d - i, 0))) <= 1e-12
            assert np.max(np.abs(zi.conj().T - sigma_matrix(d, 0, d - i))) <= 1e-12


class TestGroupLaw:
    def test_example_zx(self):
        prod = pauli.multiply_indices(PauliIndex(0, 1, 2), PauliIndex(1, 0, 2))
        assert prod.phase == pytest.approx(-1)
        assert (prod.index.p, prod.index.q) == (1, 1)

    def test_identity_neutral(self):
        prod = pauli.multiply_indices(PauliIndex(0, 0, 5), PauliIndex(2, 3, 5))
        assert prod.phase_exponent == 0
        assert (prod.index.p, prod.index.q) == (2, 3)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            pauli.multiply_indices(PauliIndex(0, 0, 2), PauliIndex(0, 0, 3))

    @pytest.mark.parametrize("d", range(2, 6))
    def test_matrix_oracle(self, d):
        for a in all_indices(d):
            for b in all_indices(d):
                prod = pauli.multiply_indices(a, b)
                lhs = pauli.sigma(a) @ pauli.sigma(b)
                rhs = prod.phase * pauli.sigma(prod.index)
                assert np.max(np.abs(lhs - rhs)) <= 1e-12

    @pytest.mark.parametrize("d", range(2, 6))
    def test_commutation_relation(self, d):
        w = pauli.omega(d)
        for a in all_indices(d):
            for b in all_indices(d):
                lhs = pauli.sigma(a) @ pauli.sigma(b)
                rhs = w ** ((b.p * a.q - a.p * b.q) % d) * (pauli.sigma(b) @ pauli.sigma(a))
                assert np.max(np.abs(lhs - rhs)) <= 1e-12


class TestAdjointIndex:
    def test_identity(self):
        adj = pauli.adjoint_index(PauliIndex(0, 0, 4))
        assert adj.phase_exponent == 0
        assert (adj.index.p, adj.index.q) == (0, 0)

    def test_qubit_xz(self):
        adj = pauli.adjoint_index(PauliIndex(1, 1, 2))
        assert adj.phase == pytest.approx(-1)
        assert (adj.index.p, adj.index.q) == (1, 1)

    @pytest.mark.parametrize("d", range(2, 6))
    def test_matrix_oracle(self, d):
        for a in all_indices(d):
            adj = pauli.adjoint_index(a)
            lhs = pauli.sigma(a).conj().T
            rhs = adj.phase * pauli.sigma(adj.index)
            assert np.max(np.abs(lhs - rhs)) <= 1e-12


class TestQft:
    def test_qubit_hadamard(self):
        assert np.allclose(pauli.qft(2), np.array([[1, 1], [1, -1]]) / np.sqrt(2))

    @pytest.mark.parametrize("d", range(2, 9))
    def test_unitary(self, d):
        f = pauli.qft(d)
        assert np.max(np.abs(f @ f.conj().T - np.eye(d))) <= 1e-12

    @pytest.mark.parametrize("d", range(2, 7))
    def test_conjugates_z_to_x(self, d):
        f = pauli.qft(d)
        for k in range(d):
            lhs = f.conj().T @ sigma_matrix(d, 0, k) @ f
            assert np.max(np.abs(lhs - sigma_matrix(d, k, 0))) <= 1e-12

    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_fourth_power_is_identity(self, rng, d):
        f = pauli.qft(d)
        v = random_complex(rng, d)
        out = v
        for _ in range(4):
            out = f @ out
        assert np.max(np.abs(out - v)) <= 1e-10


class TestExpand:
    def test_identity(self):
        coeffs = pauli.expand(np.eye(3))
        want = np.zeros(9)
        want[0] = 1
        assert np.allclose(coeffs, want)

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_ketbra_formula(self, d):
        w = pauli.omega(d)
        for k in range(d):
            for ell in range(d):
                mat = np.zeros((d, d), dtype=complex)
                mat[k, ell] = 1
                coeffs = pauli.expand(mat)
                for m in range(d):
                    for n in range(d):
                        want = w ** (-n * ell % d) / d if (m + ell) % d == k else 0
                        assert coeffs[m * d + n] == pytest.approx(want, abs=1e-12)

    def test_round_trip(self, rng):
        a = random_complex(rng, (3, 3))
        back = pauli.reconstruct(pauli.expand(a), 3)
        assert np.max(np.abs(back - a)) <= 1e-10


class TestConstraintHelpers:
    @given(st.integers(2, 5), st.integers(0, 2**32 - 1))
    @settings(max_examples=40, deadline=None)
    def test_symmetrize_scaling_is_projection(self, d, seed):
        gen = np.random.default_rng(seed)
        v = random_complex(gen, d * d)
        out = pauli.symmetrize_scaling(v, d)
        assert pauli.scaling_constraint_defect(out, d) <= 1e-12
        again = pauli.symmetrize_scaling(out, d)
        assert np.max(np.abs(again - out)) <= 1e-12

    @given(st.integers(2, 5), st.integers(0, 2**32 - 1))
    @settings(max_examples=40, deadline=None)
    def test_symmetrize_hermitian_gives_hermitian_matrix(self, d, seed):
        gen = np.random.default_rng(seed)
        v = pauli.symmetrize_hermitian(random_complex(gen, d * d), d)
        assert pauli.hermitian_constraint_defect(v, d) <= 1e-12
        mat = pauli.reconstruct(v, d)
        assert np.max(np.abs(mat - mat.conj().T)) <= 1e-12
