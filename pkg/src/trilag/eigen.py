"""Symmetric-definite generalized eigenproblem H f = E S f.

The overlap is reduced away through its Cholesky factor: with S = L L^T the
pencil becomes the standard symmetric problem L^{-1} H L^{-T}, whose
eigenvalues are the pencil eigenvalues and whose eigenvectors map back to
S-orthonormal pencil eigenvectors.
"""

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla
from scipy.linalg.lapack import dpotrf

__all__ = ["Pencil", "NotPositiveDefiniteError", "cholesky", "solve_pencil"]


class NotPositiveDefiniteError(np.linalg.LinAlgError):
    """Cholesky pivot failure; `pivot` is the 0-based index that failed."""

    def __init__(self, pivot):
        self.pivot = int(pivot)
        super().__init__(
            "matrix is not positive definite: pivot %d is not positive" % self.pivot
        )


@dataclass(frozen=True)
class Pencil:
    """Hamiltonian/overlap pair defining H f = E S f."""

    h: np.ndarray
    s: np.ndarray

    def __post_init__(self):
        if self.h.shape != self.s.shape or self.h.ndim != 2:
            raise ValueError("pencil matrices must be square with equal shape")


def cholesky(s):
    """Lower-triangular L with L L^T = s and positive diagonal.

    Raises NotPositiveDefiniteError naming the failing pivot when s is not
    positive definite.
    """
    s = np.asarray(s, dtype=float)
    L, info = dpotrf(s, lower=1, clean=1)
    if info > 0:
        raise NotPositiveDefiniteError(info - 1)
    if info < 0:
        raise ValueError("illegal argument %d to dpotrf" % (-info,))
    return L


_COND_WARN = 1e12


def solve_pencil(p, eigvecs=False):
    """Ascending eigenvalues of the pencil, optionally with eigenvectors.

    Eigenvectors, when requested, are returned as columns and are
    S-orthonormal (f_i^T S f_j = delta_ij).  Emits a warning when the
    overlap condition number estimate exceeds 1e12 (accuracy of the
    reduction degrades).
    """
    L = cholesky(p.s)
    d = np.abs(np.diag(L))
    if (d.max() / d.min()) ** 2 > _COND_WARN:
        warnings.warn(
            "overlap matrix is badly conditioned (estimate %.2e); eigenvalues "
            "may lose accuracy" % float((d.max() / d.min()) ** 2),
            RuntimeWarning,
        )
    # A = L^{-1} H L^{-T}
    Y = sla.solve_triangular(L, np.asarray(p.h, dtype=float), lower=True)
    A = sla.solve_triangular(L, Y.T, lower=True).T
    A = 0.5 * (A + A.T)
    if not eigvecs:
        return sla.eigh(A, eigvals_only=True)
    w, Z = sla.eigh(A)
    F = sla.solve_triangular(L, Z, lower=True, trans="T")
    return w, F
