import numpy as np
import pytest

from quditcp import channel, cp, linalg
from quditcp.channel import AffineChannel

from conftest import (
    random_constrained_lambda,
    random_cp_lambda,
    random_displacement,
    random_pure_state,
    random_unital,
)


def displacement_channel(d, c):
    """Fully depolarizing channel plus a displacement."""
    lam = np.zeros(d * d, dtype=complex)
    lam[0] = 1
    return AffineChannel(d=d, n=1, lam=lam, c=c)


class TestMuVector:
    def test_identity_channel(self):
        mu = cp.mu_vector(np.ones(9, dtype=complex), 3)
        want = np.zeros(9)
        want[0] = 1
        assert np.max(np.abs(mu - want)) <= 1e-12

    def test_fully_depolarizing(self):
        lam = np.zeros(4, dtype=complex)
        lam[0] = 1
        assert np.allclose(cp.mu_vector(lam, 2), np.full(4, 0.25))

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_matches_choi_spectrum(self, rng, d):
        for _ in range(10):
            lam = random_constrained_lambda(rng, d)
            mu = np.sort(cp.mu_vector(lam, d))
            spec = linalg.hermitian_eigensystem(
                channel.choi(AffineChannel(d=d, n=1, lam=lam))
            ).values
            assert np.max(np.abs(mu - spec)) <= 1e-9

    def test_constraint_violation_rejected(self, rng):
        lam = np.ones(9, dtype=complex)
        lam[1] = 1j  # breaks the conjugate-pair rule, mu would be complex
        with pytest.raises(ValueError, match="constraint"):
            cp.mu_vector(lam, 3)

    def test_sums_to_one(self, rng):
        for d in (2, 3, 4):
            mu = cp.mu_vector(random_constrained_lambda(rng, d), d)
            assert mu.sum() == pytest.approx(1.0, abs=1e-10)


class TestCheckCpQft:
    def test_known_cp_qubit(self):
        ch = AffineChannel(d=2, n=1, lam=np.array([1, 0.3, 0.4, 0.2], dtype=complex))
        report = cp.check_cp_qft(ch)
        assert report.verdict == cp.VERDICT_CP
        assert np.allclose(np.sort(report.spectrum), np.sort([1.9, 0.9, 0.7, 0.5]) / 4)

    def test_known_not_cp_qubit(self):
        ch = AffineChannel(d=2, n=1, lam=np.array([1, 1, 1, -1], dtype=complex))
        report = cp.check_cp_qft(ch)
        assert report.verdict == cp.VERDICT_NOT_CP
        assert report.margin == pytest.approx(-0.5, abs=1e-12)

    def test_depolarizing_boundary(self):
        report = cp.check_cp_qft(cp.depolarizing_channel(3, -1 / 8))
        assert report.verdict == cp.VERDICT_BOUNDARY
        assert abs(report.margin) <= 1e-9

    def test_rejects_non_unital(self, rng):
        ch = displacement_channel(2, random_displacement(rng, 2, norm=0.1))
        with pytest.raises(ValueError, match="check_cp_choi"):
            cp.check_cp_qft(ch)


class TestCheckCpChoi:
    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_agrees_with_qft(self, rng, d):
        for _ in range(25):
            ch = random_unital(rng, d)
            a = cp.check_cp_qft(ch)
            b = cp.check_cp_choi(ch)
            assert a.verdict == b.verdict
            assert np.max(np.abs(a.spectrum - b.spectrum)) <= 1e-9

    def test_shifted_depolarizing_cp(self):
        c = np.zeros(4, dtype=complex)
        c[1] = 0.2  # Z axis
        report = cp.check_cp_choi(displacement_channel(2, c))
        assert report.verdict == cp.VERDICT_CP
        assert np.allclose(report.spectrum, [0.2, 0.2, 0.3, 0.3], atol=1e-10)

    def test_overshifted_not_cp(self):
        c = np.zeros(4, dtype=complex)
        c[1] = 1.2
        report = cp.check_cp_choi(displacement_channel(2, c))
        assert report.verdict == cp.VERDICT_NOT_CP
        assert report.margin == pytest.approx((1 - 1.2) / 4, abs=1e-10)

    def test_cp_implies_nonnegative_lambda_sum(self, rng):
        seen = 0
        for _ in range(50):
            ch = random_unital(rng, 3, scale=0.3)
            report = cp.check_cp_choi(ch)
            if report.verdict == cp.VERDICT_CP:
                seen += 1
                assert ch.lam.sum().real >= -1e-9
                # conjugate axes carry conjugate scalars
                from quditcp.pauli import negate_perm

                assert np.max(np.abs(ch.lam - ch.lam[negate_perm(3, 1)].conj())) <= 1e-10
        assert seen > 0


class TestSufficientBound:
    def test_identity_channel(self):
        lam = np.ones(4, dtype=complex)
        mu_min, applies = cp.sufficient_displacement_bound(AffineChannel(d=2, n=1, lam=lam))
        assert mu_min == pytest.approx(0.0, abs=1e-12)
        assert applies  # c = 0 passes the bound

    def test_fully_depolarizing_bound(self, rng):
        for _ in range(100):
            c = random_displacement(rng, 2, norm=0.25 * rng.random())
            ch = displacement_channel(2, c)
            mu_min, applies = cp.sufficient_displacement_bound(ch)
            assert mu_min == pytest.approx(0.25)
            assert applies
            assert cp.check_cp_choi(ch).verdict in (cp.VERDICT_CP, cp.VERDICT_BOUNDARY)

    def test_bound_is_not_necessary(self):
        c = np.zeros(4, dtype=complex)
        c[1] = 0.5
        ch = displacement_channel(2, c)
        mu_min, applies = cp.sufficient_displacement_bound(ch)
        assert not applies  # ||c|| = 0.5 > 0.25
        assert cp.check_cp_choi(ch).verdict == cp.VERDICT_CP


class TestDepolarizing:
    def test_endpoints(self):
        assert cp.depolarizing_cp_range(2) == pytest.approx((-1 / 3, 1.0))
        assert cp.depolarizing_cp_range(3) == pytest.approx((-1 / 8, 1.0))

    def test_p_one_is_identity(self):
        ch = cp.depolarizing_channel(4, 1.0)
        assert np.allclose(ch.lam, 1.0)

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_two_point_spectrum(self, d):
        p = 0.4
        mu = cp.mu_vector(cp.depolarizing_channel(d, p).lam, d)
        big = (1 + (d * d - 1) * p) / (d * d)
        small = (1 - p) / (d * d)
        assert np.sum(np.abs(mu - big) < 1e-12) == 1
        assert np.sum(np.abs(mu - small) < 1e-12) == d * d - 1

    @pytest.mark.parametrize("d", range(2, 7))
    def test_verdict_flips_at_endpoints(self, d):
        p_min, p_max = cp.depolarizing_cp_range(d)
        for p, inside in [
            (p_min + 1e-6, True),
            (p_min - 1e-6, False),
            (p_max - 1e-6, True),
            (p_max + 1e-6, False),
        ]:
            verdict = cp.check_cp_qft(cp.depolarizing_channel(d, p)).verdict
            assert verdict == (cp.VERDICT_CP if inside else cp.VERDICT_NOT_CP)


class TestUnotFidelity:
    def test_values(self):
        assert cp.unot_fidelity(2) == pytest.approx(2 / 3)
        assert cp.unot_fidelity(3) == pytest.approx(3 / 8)

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_matches_channel_action(self, rng, d):
        ch = cp.depolarizing_channel(d, -1 / (d * d - 1))
        want = cp.unot_fidelity(d)
        for _ in range(10):
            psi = rng.standard_normal(d) + 1j * rng.standard_normal(d)
            psi /= np.linalg.norm(psi)
            out = channel.apply(ch, np.outer(psi, psi.conj()))
            # any unit vector orthogonal to psi
            g = rng.standard_normal(d) + 1j * rng.standard_normal(d)
            perp = g - psi * (psi.conj() @ g)
            perp /= np.linalg.norm(perp)
            fid = (perp.conj() @ out @ perp).real
            assert fid == pytest.approx(want, abs=1e-9)


class TestQubitInequalities:
    def test_identity_boundary(self):
        vals = cp.qubit_inequalities(np.array([1.0, 1.0, 1.0, 1.0]))
        assert np.allclose(vals, [4, 0, 0, 0])

    def test_depolarizing_pattern(self):
        p = 0.3
        vals = cp.qubit_inequalities(np.array([1.0, p, p, p]))
        assert np.allclose(vals, [1 + 3 * p, 1 - p, 1 - p, 1 - p])

    def test_equals_four_mu(self, rng):
        for _ in range(50):
            lam = np.array([1.0, *rng.standard_normal(3)])
            vals = cp.qubit_inequalities(lam)
            mu = cp.mu_vector(lam.astype(complex), 2)
            assert np.max(np.abs(np.sort(vals) - np.sort(4 * mu))) <= 1e-12

    def test_rejects_complex(self):
        with pytest.raises(ValueError, match="real"):
            cp.qubit_inequalities(np.array([1.0, 1j, 0, 0]))


def test_report_json_shape(rng):
    report = cp.check_cp_qft(random_unital(rng, 2))
    obj = report.to_json()
    assert set(obj) == {"verdict", "method", "spectrum", "margin", "tolerance"}
    assert obj["verdict"] in ("cp", "not_cp", "boundary")
