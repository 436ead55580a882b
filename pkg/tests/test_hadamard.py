import numpy as np
import pytest

from quditdeutsch import (
    QuditState,
    apply_hadamard,
    basis_state,
    bitwise_inner,
    fwht_inplace,
    hadamard_matrix,
    is_power_of_two,
)
from helpers import H4_SIGNS, H8_SIGNS, popcount_parity, random_qudit_state


class TestBitwiseInner:
    def test_hand_expanded_example(self):
        # 5 = 101b, 3 = 011b: products 1*1, 0*1, 1*0 -> parity 1.
        assert bitwise_inner(5, 3, 3) == 1
        assert bitwise_inner(5, 3, 3) == popcount_parity(5, 3)

    def test_zero_annihilates(self):
        for xp in range(8):
            assert bitwise_inner(0, xp, 3) == 0

    def test_all_ones(self):
        assert bitwise_inner(7, 7, 3) == 1  # 1 (+) 1 (+) 1

    def test_matches_popcount_parity_exhaustive(self):
        for x in range(16):
            for xp in range(16):
                assert bitwise_inner(x, xp, 4) == popcount_parity(x, xp)

    def test_vectorized(self):
        xs = np.arange(8)
        got = bitwise_inner(xs[:, None], xs[None, :], 3)
        want = np.array([[popcount_parity(x, y) for y in range(8)] for x in range(8)])
        assert np.array_equal(got, want)

    def test_range_check(self):
        with pytest.raises(ValueError):
            bitwise_inner(8, 0, 3)


class TestHadamardMatrix:
    def test_d2_fixture(self):
        expected = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
        assert np.allclose(hadamard_matrix(2), expected, atol=1e-12)

    def test_d4_fixture(self):
        assert np.allclose(hadamard_matrix(4) * 2.0, H4_SIGNS, atol=1e-12)

    def test_d8_fixture(self):
        assert np.allclose(hadamard_matrix(8) * np.sqrt(8), H8_SIGNS, atol=1e-12)

    def test_d8_row_three(self):
        row = hadamard_matrix(8)[3] * (2 * np.sqrt(2))
        assert np.allclose(row, [1, -1, -1, 1, 1, -1, -1, 1], atol=1e-12)

    @pytest.mark.parametrize("dim", [2, 4, 16, 64, 256])
    def test_involution_and_orthonormal(self, dim):
        h = hadamard_matrix(dim)
        assert np.allclose(h, h.T, atol=0)
        assert np.allclose(h @ h, np.eye(dim), atol=1e-12)
        assert np.allclose(h.T @ h, np.eye(dim), atol=1e-12)

    @pytest.mark.parametrize("dim", [2, 8, 64, 256])
    def test_sign_pattern_exact(self, dim):
        n = dim.bit_length() - 1
        signs = hadamard_matrix(dim) * np.sqrt(dim)
        for x in range(dim):
            for xp in range(dim):
                assert signs[x, xp] == pytest.approx(
                    (-1.0) ** bitwise_inner(x, xp, n), abs=1e-12)

    @pytest.mark.parametrize("dim", [4, 16, 256])
    def test_tensor_power_identity(self, dim):
        h2 = hadamard_matrix(2)
        kron = np.array([[1.0]])
        while kron.shape[0] < dim:
            kron = np.kron(kron, h2)
        got = hadamard_matrix(dim) * np.sqrt(dim)
        assert np.array_equal(np.sign(got), np.sign(kron))  # exact sign pattern
        assert np.allclose(hadamard_matrix(dim), kron, atol=1e-12)

    @pytest.mark.parametrize("dim", [0, 1, 3, 6, 12])
    def test_rejects_non_power_of_two(self, dim):
        with pytest.raises(ValueError):
            hadamard_matrix(dim)

    def test_rejects_huge_dense(self):
        with pytest.raises(ValueError, match="dense"):
            hadamard_matrix(1 << 13)


class TestApplyHadamard:
    def test_basis_zero_d4(self):
        state = apply_hadamard(basis_state(4, 0))
        assert np.allclose(state.amps, np.full(4, 0.5), atol=1e-12)

    def test_basis_one_d4(self):
        state = apply_hadamard(basis_state(4, 1))
        assert np.allclose(state.amps, [0.5, -0.5, 0.5, -0.5], atol=1e-12)

    @pytest.mark.parametrize("dim", [2, 4, 32, 1024])
    def test_involution_random(self, dim):
        rng = np.random.default_rng(dim)
        state = random_qudit_state(dim, rng)
        again = apply_hadamard(apply_hadamard(state))
        assert np.max(np.abs(again.amps - state.amps)) < 1e-12

    @pytest.mark.parametrize("dim", [2, 4, 8, 64, 256])
    def test_agrees_with_matrix(self, dim):
        rng = np.random.default_rng(dim + 1)
        state = random_qudit_state(dim, rng)
        fast = apply_hadamard(state).amps
        dense = hadamard_matrix(dim) @ state.amps
        assert np.max(np.abs(fast - dense)) < 1e-12

    def test_rejects_non_power_of_two(self):
        amps = np.full(3, 1 / np.sqrt(3), dtype=complex)
        with pytest.raises(ValueError):
            apply_hadamard(QuditState(3, amps))

    def test_preserves_norm(self):
        rng = np.random.default_rng(7)
        for dim in (2, 16, 4096):
            state = apply_hadamard(random_qudit_state(dim, rng))
            assert np.vdot(state.amps, state.amps).real == pytest.approx(1.0, abs=1e-9)


class TestFwhtInplace:
    def test_matches_matrix_along_each_axis(self):
        rng = np.random.default_rng(5)
        mat = rng.standard_normal((8, 4))
        h8, h4 = hadamard_matrix(8), hadamard_matrix(4)

        rows = mat.copy()
        fwht_inplace(rows, axis=0)
        assert np.allclose(rows, h8 @ mat, atol=1e-12)

        cols = mat.copy()
        fwht_inplace(cols, axis=1)
        assert np.allclose(cols, mat @ h4, atol=1e-12)

    def test_rejects_non_contiguous(self):
        mat = np.zeros((4, 4))[:, ::2]
        with pytest.raises(ValueError, match="contiguous"):
            fwht_inplace(mat, axis=0)

    def test_rejects_integer_buffer(self):
        with pytest.raises(ValueError, match="float or complex"):
            fwht_inplace(np.zeros(4, dtype=np.int64))

    def test_large_dim_fast(self):
        # O(d log d): d = 2^20 in well under a second.
        import time
        buf = np.zeros(1 << 20)
        buf[0] = 1.0
        t0 = time.perf_counter()
        fwht_inplace(buf)
        elapsed = time.perf_counter() - t0
        assert elapsed < 1.0
        assert np.allclose(buf, (1 << 20) ** -0.5, atol=1e-15)


def test_is_power_of_two():
    assert [d for d in range(1, 20) if is_power_of_two(d)] == [1, 2, 4, 8, 16]
