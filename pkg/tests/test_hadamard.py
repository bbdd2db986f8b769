"""Tests for complex Hadamard matrices, equivalence moves, and constructions."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tlhad.hadamard import (
    EquivalenceMove,
    apply_equivalence,
    butson_residual,
    chm_residual,
    dephase,
    dita,
    f4_family,
    f6_family,
    fourier,
    ghm_residual,
    identity_move,
    invert_move,
    is_butson,
    is_chm,
    is_ghm,
    permutation_matrix,
)
from tlhad.linalg import approx_eq, as_matrix, diag, identity, kron, unit_root


def random_unimodular(rng, n):
    return np.exp(1j * rng.uniform(0.0, 2.0 * math.pi, size=n))


class TestFourier:
    def test_size_one(self):
        assert approx_eq(fourier(1), as_matrix([[1]]), 0).ok

    def test_size_two(self):
        assert approx_eq(fourier(2), as_matrix([[1, 1], [1, -1]]), 1e-15).ok

    def test_size_three(self):
        w = unit_root(1, 3)
        expected = as_matrix([[1, 1, 1], [1, w, w * w], [1, w * w, w]])
        assert approx_eq(fourier(3), expected, 1e-15).ok

    def test_generalized_index(self):
        f = fourier(5, ell=2)
        for i in range(5):
            for j in range(5):
                assert abs(f[i, j] - unit_root(2 * i * j, 5)) < 1e-14

    def test_non_coprime_index_rejected(self):
        with pytest.raises(ValueError):
            fourier(4, ell=2)

    def test_nonpositive_size_rejected(self):
        with pytest.raises(ValueError):
            fourier(0)

    @pytest.mark.parametrize("n", range(1, 13))
    def test_is_butson_of_order_n(self, n):
        verdict = is_ghm(fourier(n))
        assert verdict.is_chm and verdict.is_ghm
        assert verdict.butson_order == (n if n > 1 else 1)


class TestChm:
    @pytest.mark.parametrize("n", range(2, 7))
    def test_fourier_matrices(self, n):
        assert is_chm(fourier(n))

    def test_unimodular_f4_member(self):
        assert is_chm(f4_family(1j))

    def test_non_unimodular_f4_member_fails(self):
        assert not is_chm(f4_family(2))

    def test_residual_zero_matrix(self):
        assert chm_residual(as_matrix([[0, 0], [0, 0]])) == pytest.approx(2.0)

    def test_residual_detects_row_correlation(self):
        u = as_matrix([[1, 1], [1, 1]])
        assert chm_residual(u) == pytest.approx(2.0)


class TestGhm:
    def test_fourier_three(self):
        v = is_ghm(fourier(3))
        assert v.is_ghm and v.is_chm
        assert v.max_residual < 1e-14

    def test_scaling_is_invisible_to_ghm(self):
        # GHM depends only on u entrywise times the transposed inverse,
        # so a global scale cancels.
        assert is_ghm(2 * fourier(3)).is_ghm

    def test_generic_invertible_matrix_is_not_ghm(self):
        v = is_ghm(as_matrix([[1, 1], [1, 2]]))
        assert not v.is_ghm
        assert v.max_residual > 0.5

    def test_f4_with_real_parameter_is_ghm_not_chm(self):
        v = is_ghm(f4_family(2))
        assert v.is_ghm and not v.is_chm
        assert v.butson_order is None

    def test_zero_entry_gives_infinite_residual(self):
        v = is_ghm(as_matrix([[1, 0], [1, 1]]))
        assert not v.is_ghm
        assert math.isinf(v.max_residual)

    def test_singular_matrix_gives_infinite_residual(self):
        v = is_ghm(as_matrix([[1, 1], [1, 1]]))
        assert not v.is_ghm
        assert math.isinf(ghm_residual(as_matrix([[1, 1], [1, 1]])))

    def test_scaled_identity_is_not_ghm(self):
        assert not is_ghm(2 * identity(2)).is_ghm

    def test_chm_implies_ghm(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            u = apply_equivalence(
                fourier(4),
                EquivalenceMove(
                    (0, 1, 2, 3),
                    tuple(random_unimodular(rng, 4)),
                    tuple(random_unimodular(rng, 4)),
                    (0, 1, 2, 3),
                ),
            )
            v = is_ghm(u)
            assert v.is_chm
            assert v.is_ghm


class TestButson:
    def test_fourier_three_is_butson_three(self):
        assert is_butson(fourier(3), 3)
        assert butson_residual(fourier(3), 3) < 1e-14

    def test_real_hadamard_is_butson_two(self):
        assert is_butson(as_matrix([[1, 1], [1, -1]]), 2)

    def test_f4_with_tenth_root_is_not_butson_four(self):
        import cmath

        a = cmath.exp(1j * math.pi / 5)
        assert is_chm(f4_family(a))
        assert not is_butson(f4_family(a), 4)

    def test_nonpositive_order_rejected(self):
        with pytest.raises(ValueError):
            is_butson(fourier(2), 0)

    def test_minimal_order_reported(self):
        # F4 at a = i is a fourth-root matrix and not a q-th-root matrix
        # for any q < 4.
        assert is_ghm(f4_family(1j)).butson_order == 4


class TestEquivalenceMoves:
    def test_identity_move_is_identity(self):
        u = fourier(3)
        assert approx_eq(apply_equivalence(u, identity_move(3)), u, 0).ok

    def test_permutation_matrix(self):
        p = permutation_matrix((2, 0, 1))
        assert approx_eq(
            p, as_matrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]]), 0
        ).ok

    def test_row_swap_preserves_ghm(self):
        move = EquivalenceMove((1, 0, 2), (1, 1, 1), (1, 1, 1), (0, 1, 2))
        swapped = apply_equivalence(fourier(3), move)
        assert is_ghm(swapped).is_ghm
        assert np.allclose(swapped[0], fourier(3)[1])
        assert np.allclose(swapped[1], fourier(3)[0])

    def test_unimodular_moves_preserve_chm(self):
        rng = np.random.default_rng(4)
        for _ in range(20):
            n = int(rng.integers(2, 6))
            perm1 = tuple(rng.permutation(n).tolist())
            perm2 = tuple(rng.permutation(n).tolist())
            move = EquivalenceMove(
                perm1,
                tuple(random_unimodular(rng, n)),
                tuple(random_unimodular(rng, n)),
                perm2,
            )
            assert is_chm(apply_equivalence(fourier(n), move))

    def test_invert_move_round_trip(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            n = int(rng.integers(2, 6))
            scale = rng.uniform(0.5, 2.0, size=n)
            move = EquivalenceMove(
                tuple(rng.permutation(n).tolist()),
                tuple(scale * random_unimodular(rng, n)),
                tuple(random_unimodular(rng, n)),
                tuple(rng.permutation(n).tolist()),
            )
            u = as_matrix(
                rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
            )
            forward = apply_equivalence(u, move)
            back = apply_equivalence(forward, invert_move(move))
            assert approx_eq(back, u, 1e-12).ok

    def test_move_validation(self):
        with pytest.raises(ValueError):
            EquivalenceMove((0, 0), (1, 1), (1, 1), (0, 1))
        with pytest.raises(ValueError):
            EquivalenceMove((0, 1), (1, 0), (1, 1), (0, 1))
        with pytest.raises(ValueError):
            EquivalenceMove((0, 1), (1, 1), (1, 1), (0, 2))


class TestDephase:
    def test_first_row_and_column_become_ones(self):
        rng = np.random.default_rng(6)
        u = apply_equivalence(
            fourier(4),
            EquivalenceMove(
                tuple(rng.permutation(4).tolist()),
                tuple(random_unimodular(rng, 4)),
                tuple(random_unimodular(rng, 4)),
                tuple(rng.permutation(4).tolist()),
            ),
        )
        d, move = dephase(u)
        assert np.allclose(d[0, :], 1.0)
        assert np.allclose(d[:, 0], 1.0)
        assert approx_eq(apply_equivalence(u, move), d, 1e-13).ok

    def test_already_dephased_fixed_point(self):
        d, move = dephase(fourier(3))
        assert approx_eq(d, fourier(3), 1e-15).ok
        assert move.left_perm == (0, 1, 2) and move.right_perm == (0, 1, 2)

    def test_preserves_ghm_verdict(self):
        rng = np.random.default_rng(7)
        base = dita(fourier(2), [f4_family(2), f4_family(0.5)])
        for _ in range(20):
            n = base.shape[0]
            move = EquivalenceMove(
                tuple(rng.permutation(n).tolist()),
                tuple(random_unimodular(rng, n)),
                tuple(random_unimodular(rng, n)),
                tuple(rng.permutation(n).tolist()),
            )
            scrambled = apply_equivalence(base, move)
            d, _ = dephase(scrambled)
            assert is_ghm(d).is_ghm == is_ghm(scrambled).is_ghm

    def test_zero_in_first_row_rejected(self):
        with pytest.raises(ValueError):
            dephase(as_matrix([[1, 0], [1, 1]]))


class TestF4Family:
    def test_real_point_is_butson_two(self):
        v = is_ghm(f4_family(1))
        assert v.is_chm and v.butson_order == 2

    def test_layout(self):
        u = f4_family(3)
        expected = as_matrix(
            [[1, 1, 1, 1], [1, -1, 1, -1], [1, 3, -1, -3], [1, -3, -1, 3]]
        )
        assert approx_eq(u, expected, 1e-15).ok

    def test_zero_parameter_rejected(self):
        with pytest.raises(ValueError):
            f4_family(0)

    @given(st.floats(0.0, 2.0 * math.pi, allow_nan=False))
    @settings(max_examples=30)
    def test_unimodular_parameter_gives_chm(self, theta):
        import cmath

        assert is_chm(f4_family(cmath.exp(1j * theta)))


class TestF6Family:
    def test_unimodular_point_is_chm(self):
        assert is_chm(f6_family(1, 1))

    def test_random_unimodular_points_are_chm(self):
        rng = np.random.default_rng(8)
        for _ in range(10):
            a, b = np.exp(1j * rng.uniform(0, 2 * math.pi, size=2))
            assert is_chm(f6_family(a, b))

    def test_non_unimodular_point_is_ghm_not_chm(self):
        v = is_ghm(f6_family(2, 1 / 3))
        assert v.is_ghm and not v.is_chm

    def test_zero_parameter_rejected(self):
        with pytest.raises(ValueError):
            f6_family(0, 1)
        with pytest.raises(ValueError):
            f6_family(1, 0)

    def test_block_structure(self):
        u = f6_family(2, 3)
        w = unit_root(1, 6)
        assert abs(u[3, 1] - 2) < 1e-14
        assert abs(u[3, 3] + 1) < 1e-14
        assert abs(u[4, 2] - 3 * w**4) < 1e-14
        assert abs(u[1, 4] - w**2) < 1e-14


class TestDita:
    def test_equal_blocks_reduce_to_kron(self):
        f2, f3 = fourier(2), fourier(3)
        built = dita(f2, [f3, f3])
        assert approx_eq(built, kron(f2, f3), 1e-15).ok

    def test_reproduces_f6_family(self):
        a, b = 2 + 0j, 0.5j
        blocks = [fourier(3), fourier(3) @ diag([1, a, b])]
        assert approx_eq(dita(fourier(2), blocks), f6_family(a, b), 1e-14).ok

    def test_reproduces_f4_family(self):
        a = 3 + 0j
        blocks = [fourier(2), fourier(2) @ diag([1, a])]
        assert approx_eq(dita(fourier(2), blocks), f4_family(a), 1e-14).ok

    def test_ghm_closure(self):
        rng = np.random.default_rng(9)
        for _ in range(25):
            scale = rng.uniform(0.25, 4.0, size=4)
            blocks = [f4_family(s) for s in scale[:2]]
            built = dita(fourier(2), blocks)
            assert is_ghm(built).is_ghm

    def test_block_count_mismatch_rejected(self):
        with pytest.raises(ValueError):
            dita(fourier(2), [fourier(3)])

    def test_block_size_mismatch_rejected(self):
        with pytest.raises(ValueError):
            dita(fourier(2), [fourier(3), fourier(2)])
