"""Tests for Hecke generators, Baxterization, and Yang-Baxter checks."""

import cmath
import math

import numpy as np
import pytest

from tlhad.baxter import (
    BraidData,
    baxterize,
    baxterize_agreement,
    braid_from_tl,
    check_braid,
    check_spectral_ybe,
    check_ybe,
    flip_operator,
    hecke_residual,
    q_from_nu,
    spectral_samples,
    to_plain_r,
)
from tlhad.hadamard import fourier
from tlhad.linalg import (
    approx_eq,
    as_matrix,
    identity,
    inverse,
    kron,
    max_abs,
    zeros,
)
from tlhad.master import fourier_master, master_matrix
from tlhad.tlrep import (
    TLAnsatz,
    build_local_generator,
    fixture_u2_ansatz,
    reconstruct_m,
    verify_tl,
)


def braid_from_spec(n):
    spec = fourier_master(n)
    m = reconstruct_m(master_matrix(spec), fourier(n), spec.lambdas)
    a = TLAnsatz(m, spec.exponents)
    return braid_from_tl(build_local_generator(a), a.alpha)


class TestQFromNu:
    def test_loop_weight_four_is_degenerate_point(self):
        assert abs(q_from_nu(4) - 1) < 1e-12

    def test_loop_weight_three(self):
        assert abs(q_from_nu(3) - cmath.exp(1j * math.pi / 6)) < 1e-12

    def test_loop_weight_nine(self):
        assert abs(q_from_nu(9) - (3 + math.sqrt(5)) / 2) < 1e-12

    @pytest.mark.parametrize("nu", [2, 3, 3.5, 4, 9, 2 + 1j])
    def test_defining_identity(self, nu):
        q = q_from_nu(nu)
        assert abs(q + 1 / q - cmath.sqrt(nu)) < 1e-10

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            q_from_nu(0)


class TestBraidFromTL:
    def test_zero_generator_gives_scalar_braid(self):
        b = braid_from_tl(zeros(4, 4), 3)
        assert approx_eq(b.r_check, q_from_nu(3) * identity(4), 1e-12).ok
        assert hecke_residual(b) <= 1e-10

    def test_fixture_u2(self):
        a = fixture_u2_ansatz()
        b = braid_from_tl(build_local_generator(a), a.alpha)
        assert b.nu == pytest.approx(3.0)
        assert hecke_residual(b) <= 1e-10
        assert b.local_dim == 3

    def test_loop_violating_input_rejected(self):
        with pytest.raises(ValueError):
            braid_from_tl(identity(4), 3)

    def test_non_square_dimension_rejected(self):
        b = braid_from_tl(zeros(4, 4), 3)
        with pytest.raises(ValueError):
            BraidData(b.q, b.nu, zeros(6, 6)).local_dim


class TestHecke:
    @pytest.mark.parametrize("n", [2, 3])
    def test_reconstructed_generators(self, n):
        b = braid_from_spec(n)
        assert hecke_residual(b) <= 1e-10

    def test_hecke_gives_inverse_formula(self):
        # (R - q)(R + 1/q) = 0 implies R^{-1} = R - (q - 1/q) I.
        b = braid_from_spec(3)
        omega = b.q - 1 / b.q
        direct = inverse(b.r_check)
        assert approx_eq(
            direct, b.r_check - omega * identity(9), 1e-10
        ).ok

    def test_json_round_trip(self):
        b = braid_from_spec(2)
        back = BraidData.from_dict(b.to_dict())
        assert abs(back.q - b.q) == 0
        assert abs(back.nu - b.nu) == 0
        assert np.array_equal(back.r_check, b.r_check)


class TestCheckBraid:
    def test_identity_satisfies_braid(self):
        assert check_braid(identity(4)) <= 1e-15

    def test_flip_satisfies_braid(self):
        assert check_braid(flip_operator(2)) <= 1e-15

    @pytest.mark.parametrize("n", [2, 3])
    def test_reconstructed_braids(self, n):
        b = braid_from_spec(n)
        assert check_braid(b.r_check) <= 1e-9

    def test_fixture_u2_braid(self):
        a = fixture_u2_ansatz()
        b = braid_from_tl(build_local_generator(a), a.alpha)
        assert check_braid(b.r_check) <= 1e-9

    def test_generic_matrix_fails(self):
        rng = np.random.default_rng(16)
        r = as_matrix(rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))
        assert check_braid(r) > 0.1

    def test_dimension_must_be_square(self):
        with pytest.raises(ValueError):
            check_braid(zeros(6, 6))


class TestBaxterize:
    def test_unit_spectral_parameter(self):
        b = braid_from_spec(2)
        omega = b.q - 1 / b.q
        r1 = baxterize(b, 1)
        assert approx_eq(r1, omega * identity(4), 1e-10).ok

    def test_agreement_with_closed_form(self):
        a = fixture_u2_ansatz()
        b = braid_from_tl(build_local_generator(a), a.alpha)
        for u in (2, 0.5, 1j, 0.3 - 0.7j):
            assert baxterize_agreement(b, u) <= 1e-10

    def test_zero_spectral_parameter_rejected(self):
        b = braid_from_spec(2)
        with pytest.raises(ValueError):
            baxterize(b, 0)

    def test_degenerate_loop_weight(self):
        # nu = 4 gives q = 1 and the closed form still matches.
        t = zeros(4, 4)
        b = braid_from_tl(t, 4)
        assert baxterize_agreement(b, 2 + 1j) <= 1e-12


class TestSpectralSamples:
    def test_deterministic_for_seed(self):
        assert spectral_samples(5, seed=42) == spectral_samples(5, seed=42)
        assert spectral_samples(5, seed=1) != spectral_samples(5, seed=2)

    def test_count(self):
        assert len(spectral_samples(7)) == 7

    def test_values_plausible(self):
        for u, w in spectral_samples(20):
            assert math.exp(-1) - 1e-9 <= abs(u) <= math.e + 1e-9
            assert math.exp(-1) - 1e-9 <= abs(w) <= math.e + 1e-9


class TestSpectralYbe:
    @pytest.mark.parametrize("n", [2, 3])
    def test_reconstructed_braids(self, n):
        b = braid_from_spec(n)
        assert check_spectral_ybe(b, count=20, seed=42) <= 1e-8

    def test_fixture_u2(self):
        a = fixture_u2_ansatz()
        b = braid_from_tl(build_local_generator(a), a.alpha)
        assert check_spectral_ybe(b, count=20, seed=42) <= 1e-8

    def test_deterministic(self):
        b = braid_from_spec(2)
        assert check_spectral_ybe(b, seed=42) == check_spectral_ybe(b, seed=42)

    def test_explicit_samples(self):
        b = braid_from_spec(2)
        residual = check_spectral_ybe(b, samples=[(1.0, 1.0)])
        # At u = w = 1 both sides are omega(q)^3 times the identity.
        assert residual <= 1e-12

    def test_braid_violation_shows_up(self):
        bad = BraidData(q_from_nu(3), 3, as_matrix(np.diag([1, 2, 3, 4])))
        assert check_spectral_ybe(bad, count=5, seed=42) > 1e-3


class TestPlainYbe:
    def test_flip_braid_gives_identity_r(self):
        b = BraidData(1, 4, flip_operator(2))
        r = to_plain_r(b)
        assert approx_eq(r, identity(4), 0).ok
        assert check_ybe(r) <= 1e-15

    @pytest.mark.parametrize("n", [2, 3])
    def test_reconstructed_braids(self, n):
        b = braid_from_spec(n)
        assert check_ybe(to_plain_r(b)) <= 1e-9

    def test_agrees_with_braid_residual_on_braid_solutions(self):
        for n in (2, 3):
            b = braid_from_spec(n)
            delta = abs(check_braid(b.r_check) - check_ybe(to_plain_r(b)))
            assert delta <= 1e-12

    def test_agrees_with_braid_residual_off_solutions(self):
        # The two defects differ by permutation conjugation, so the residuals
        # agree even far away from actual solutions.
        rng = np.random.default_rng(17)
        for _ in range(5):
            vmat = rng.normal(size=(4, 2)) + 1j * rng.normal(size=(4, 2))
            wmat = rng.normal(size=(2, 4)) + 1j * rng.normal(size=(2, 4))
            proj = vmat @ inverse(as_matrix(wmat @ vmat)) @ wmat
            q = q_from_nu(3)
            r_check = as_matrix(q * identity(4) - (q + 1 / q) * proj)
            b = BraidData(q, 3, r_check)
            assert hecke_residual(b) <= 1e-10
            braid = check_braid(r_check)
            ybe = check_ybe(to_plain_r(b))
            assert abs(braid - ybe) <= 1e-10 * max(1.0, braid)

    def test_flip_conjugation_structure(self):
        # R13 acting on site pair (1, 3) equals R12 conjugated by the flip
        # of the last two factors.
        n = 2
        b = braid_from_spec(n)
        r = np.asarray(to_plain_r(b))
        eye = np.asarray(identity(n))
        pi23 = np.asarray(kron(identity(n), flip_operator(n)))
        r12 = np.kron(r, eye)
        r13 = pi23 @ r12 @ pi23
        # Contract indices directly: R13[i a k, j b l] must act as R on the
        # outer pair and as the identity on the middle index.
        t = r13.reshape(n, n, n, n, n, n)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        for a in range(n):
                            assert (
                                abs(t[i, a, k, j, a, l] - r[i * n + k, j * n + l])
                                < 1e-12
                            )
                        assert abs(t[i, 0, k, j, 1, l]) < 1e-12


class TestFlipOperator:
    def test_two_by_two(self):
        p = flip_operator(2)
        expected = as_matrix(
            [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
        )
        assert approx_eq(p, expected, 0).ok

    def test_involution(self):
        for n in (2, 3, 4):
            p = flip_operator(n)
            assert max_abs(p @ p - identity(n * n)) == 0

    def test_swaps_simple_tensors(self):
        rng = np.random.default_rng(18)
        x = rng.normal(size=3) + 1j * rng.normal(size=3)
        y = rng.normal(size=3) + 1j * rng.normal(size=3)
        p = np.asarray(flip_operator(3))
        assert np.allclose(p @ np.kron(x, y), np.kron(y, x))


class TestEndToEnd:
    def test_full_pipeline_from_master_spec(self):
        spec = fourier_master(3)
        m = reconstruct_m(master_matrix(spec), fourier(3), spec.lambdas)
        a = TLAnsatz(m, spec.exponents)
        report = verify_tl(a)
        assert report.max_residual <= 1e-9
        b = braid_from_tl(build_local_generator(a), a.alpha)
        assert hecke_residual(b) <= 1e-10
        assert check_braid(b.r_check) <= 1e-9
        assert check_spectral_ybe(b, count=20, seed=42) <= 1e-8
        assert check_ybe(to_plain_r(b)) <= 1e-9
