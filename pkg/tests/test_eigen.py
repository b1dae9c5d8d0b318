import math
import warnings

import numpy as np
import pytest

from trilag.basis import BasisSpec, h0_matrix, overlap_matrix
from trilag.eigen import NotPositiveDefiniteError, Pencil, cholesky, solve_pencil


class TestCholesky:
    def test_identity(self):
        np.testing.assert_array_equal(cholesky(np.eye(4)), np.eye(4))

    def test_hand_factor(self):
        L = cholesky(np.array([[4.0, 2.0], [2.0, 3.0]]))
        np.testing.assert_allclose(L, [[2.0, 0.0], [1.0, math.sqrt(2)]], rtol=1e-15)

    def test_indefinite_names_pivot(self):
        with pytest.raises(NotPositiveDefiniteError) as err:
            cholesky(np.array([[1.0, 2.0], [2.0, 1.0]]))
        assert err.value.pivot == 1

    def test_reconstruction(self):
        S = overlap_matrix(BasisSpec(1.0, 2, 40))
        L = cholesky(S)
        np.testing.assert_allclose(L @ L.T, S, rtol=0, atol=1e-12)
        assert np.all(np.diag(L) > 0)


class TestSolvePencil:
    def test_diagonal(self):
        w = solve_pencil(Pencil(np.diag([1.0, 2.0]), np.eye(2)))
        np.testing.assert_allclose(w, [1.0, 2.0], rtol=1e-14)

    def test_pencil_identity(self):
        S = overlap_matrix(BasisSpec(1.0, 0, 25))
        w = solve_pencil(Pencil(S, S))
        np.testing.assert_allclose(w, np.ones(25), rtol=1e-12)

    def test_reference_two_state(self):
        b = BasisSpec(1.0, 0, 2)
        w = solve_pencil(Pencil(h0_matrix(b), overlap_matrix(b)))
        np.testing.assert_allclose(w, [(2 - math.sqrt(3)) / 8, (2 + math.sqrt(3)) / 8], rtol=1e-13)

    def test_ascending_and_complete(self):
        b = BasisSpec(2.0, 1, 80)
        w = solve_pencil(Pencil(h0_matrix(b), overlap_matrix(b)))
        assert len(w) == 80
        assert np.all(np.diff(w) >= 0)

    def test_s_orthonormal_eigenvectors(self):
        b = BasisSpec(1.0, 1, 60)
        H, S = h0_matrix(b), overlap_matrix(b)
        w, F = solve_pencil(Pencil(H, S), eigvecs=True)
        gram = F.T @ S @ F
        np.testing.assert_allclose(gram, np.eye(60), rtol=0, atol=1e-10)

    def test_residuals(self):
        b = BasisSpec(1.5, 0, 100)
        H, S = h0_matrix(b), overlap_matrix(b)
        w, F = solve_pencil(Pencil(H, S), eigvecs=True)
        scale = np.linalg.norm(H) + np.abs(w)[:, None].max() * np.linalg.norm(S)
        for i in [0, 40, 99]:
            res = np.linalg.norm(H @ F[:, i] - w[i] * (S @ F[:, i]))
            assert res <= 1e-10 * scale

    def test_condition_warning(self):
        bad = np.diag([1.0, 1e14])
        with pytest.warns(RuntimeWarning, match="conditioned"):
            solve_pencil(Pencil(np.eye(2), bad))

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            Pencil(np.eye(3), np.eye(2))

    def test_indefinite_propagates(self):
        with pytest.raises(NotPositiveDefiniteError):
            solve_pencil(Pencil(np.eye(2), np.array([[1.0, 2.0], [2.0, 1.0]])))
