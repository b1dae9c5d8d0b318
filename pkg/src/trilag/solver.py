"""End-to-end bound-state computation and the convergence strategy.

Assembles H = H0 + V for a potential family, solves the generalized
eigenproblem, extracts bound states, scans the basis scale lam for the
stability plateau, tracks convergence in the basis size N, and brackets
the critical screening where a level detaches into the continuum.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional, Union

import numpy as np

from .basis import BasisSpec, h0_matrix, overlap_matrix
from .eigen import Pencil, cholesky, solve_pencil
from .potentials import (
    KratzerParams,
    MorseParams,
    YukawaParams,
    kratzer_matrix,
    morse_matrix,
    yukawa_matrix,
)

__all__ = [
    "PotentialSpec",
    "SpectrumResult",
    "PlateauReport",
    "ConvergenceTable",
    "potential_matrix",
    "bound_states",
    "kratzer_exact",
    "lambda_scan",
    "converge_in_n",
    "critical_screening",
]

PotentialSpec = Union[YukawaParams, KratzerParams, MorseParams]

# eigenvalues this close to zero are reported as unresolved, not bound
ZERO_BAND = 1e-12

# levels with more than half their norm in this many trailing coefficients
# are truncation artifacts, not converged states
GUARD_TAIL = 10
GUARD_FRACTION = 0.5


def potential_matrix(potential, basis):
    """Analytic potential matrix for any of the three families."""
    if isinstance(potential, YukawaParams):
        return yukawa_matrix(potential, basis)
    if isinstance(potential, KratzerParams):
        return kratzer_matrix(potential, basis)
    if isinstance(potential, MorseParams):
        return morse_matrix(potential, basis)
    raise TypeError("unknown potential parameters: %r" % (potential,))


@dataclass(frozen=True)
class SpectrumResult:
    """Pencil spectrum with the bound (E < 0) subsequence flagged."""

    energies: np.ndarray
    bound: np.ndarray
    basis: BasisSpec
    potential: PotentialSpec
    suspect: tuple    # indices of bound levels flagged as truncation artifacts
    unresolved: tuple # indices within ZERO_BAND of zero


def bound_states(potential, basis):
    """Assemble H = H0 + V and solve; negative eigenvalues are bound states.

    Eigenvectors are inspected for the truncation-artifact guard: a level
    whose S-normalized coefficient vector has more than half its norm in
    the last GUARD_TAIL coefficients is flagged suspect.
    """
    S = overlap_matrix(basis)
    H = h0_matrix(basis) + potential_matrix(potential, basis)
    w, F = solve_pencil(Pencil(H, S), eigvecs=True)
    bound_idx = [i for i, e in enumerate(w) if e < -ZERO_BAND]
    unresolved = tuple(i for i, e in enumerate(w) if abs(e) <= ZERO_BAND)
    suspect = []
    if bound_idx and basis.size > GUARD_TAIL:
        L = cholesky(S)
        Y = L.T @ F[:, bound_idx]
        tail = np.sum(Y[-GUARD_TAIL:, :] ** 2, axis=0) / np.sum(Y ** 2, axis=0)
        suspect = [bound_idx[j] for j in range(len(bound_idx)) if tail[j] > GUARD_FRACTION]
    return SpectrumResult(
        energies=w,
        bound=w[bound_idx],
        basis=basis,
        potential=potential,
        suspect=tuple(suspect),
        unresolved=unresolved,
    )


def kratzer_exact(coulomb, b, ell, n):
    """Exact Kratzer level E_n = -coulomb^2 / (2 (n + 1/2 + sqrt(b + ell^2))^2)."""
    if b + ell * ell <= 0:
        raise ValueError("kratzer_exact requires b + ell^2 > 0")
    if n < 0:
        raise ValueError("level index must be >= 0")
    return -coulomb ** 2 / (2.0 * (n + 0.5 + math.sqrt(b + ell * ell)) ** 2)


@dataclass(frozen=True)
class PlateauReport:
    """Eigenvalue traces over a lam grid with the detected stability window."""

    grid: np.ndarray
    traces: np.ndarray           # shape (len(grid), k), k lowest eigenvalues
    plateau: Optional[tuple]     # (lam_lo, lam_hi) or None
    spread: Optional[np.ndarray] # per-level relative spread inside the plateau
    tol_rel: float


def _window_spread(block):
    """Per-level relative variation of a (points, k) block of eigenvalues."""
    lo = block.min(axis=0)
    hi = block.max(axis=0)
    scale = np.maximum(np.abs(lo), np.abs(hi))
    return (hi - lo) / np.where(scale > 0, scale, 1.0)


def lambda_scan(potential, basis, grid, k, tol_rel=1e-9, threads=None):
    """Track the k lowest levels over a lam grid and find the plateau.

    The plateau is the widest contiguous window of at least 5 grid points
    where all k tracked levels are bound and each varies by at most
    tol_rel relative; ties go to the window starting at smaller lam.
    Absence of a plateau is a normal outcome, not an error.
    """
    grid = np.asarray(grid, dtype=float)
    if len(grid) < 5:
        raise ValueError("lam grid must have at least 5 points")
    if np.any(np.diff(grid) <= 0):
        raise ValueError("lam grid must be strictly ascending")
    if k < 1:
        raise ValueError("k must be >= 1")

    def solve_at(lam):
        return bound_states(potential, basis.with_lam(lam)).energies[:k]

    if threads is not None and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            traces = np.array(list(pool.map(solve_at, grid)))
    else:
        traces = np.array([solve_at(lam) for lam in grid])

    usable = np.all(traces < -ZERO_BAND, axis=1)
    best = None  # (width, start, end)
    G = len(grid)
    for a in range(G):
        if not usable[a]:
            continue
        for b in range(a + 4, G):
            if not usable[a:b + 1].all():
                break
            if np.max(_window_spread(traces[a:b + 1])) <= tol_rel:
                width = b - a
                if best is None or width > best[0]:
                    best = (width, a, b)
    if best is None:
        return PlateauReport(grid=grid, traces=traces, plateau=None, spread=None,
                             tol_rel=tol_rel)
    _, a, b = best
    return PlateauReport(
        grid=grid,
        traces=traces,
        plateau=(float(grid[a]), float(grid[b])),
        spread=_window_spread(traces[a:b + 1]),
        tol_rel=tol_rel,
    )


@dataclass(frozen=True)
class ConvergenceTable:
    """Per-level eigenvalue traces over basis sizes."""

    n_grid: tuple
    traces: np.ndarray   # shape (len(n_grid), k)
    converged: np.ndarray  # per level: last two sizes agree within tol
    tol: float


def converge_in_n(potential, basis, n_grid, k, tol=1e-12):
    """Eigenvalue traces as the basis size grows through n_grid."""
    n_grid = tuple(int(N) for N in n_grid)
    if any(b <= a for a, b in zip(n_grid, n_grid[1:])):
        raise ValueError("n_grid must be strictly ascending")
    traces = np.array(
        [bound_states(potential, basis.with_size(N)).energies[:k] for N in n_grid]
    )
    if len(n_grid) >= 2:
        converged = np.abs(traces[-1] - traces[-2]) <= tol
    else:
        converged = np.zeros(k, dtype=bool)
    return ConvergenceTable(n_grid=n_grid, traces=traces, converged=converged, tol=tol)


def _with_delta(p, delta):
    """Yukawa template with the screening set to delta (both parts for the
    complex-screened variants)."""
    if p.variant == "classical":
        return replace(p, mu_re=float(delta), mu_im=0.0)
    return replace(p, mu_re=float(delta), mu_im=float(delta))


def critical_screening(p, ell, level, bracket, tol=1e-4, basis=None):
    """Bisect the screening delta at which the given level detaches.

    The predicate is the count of bound states: the level exists while
    more than `level` states are bound.  Requires the level bound at the
    lower bracket end and unbound at the upper end.
    """
    if basis is None:
        basis = BasisSpec(lam=1.0, ell=ell, size=100)
    lo, hi = float(bracket[0]), float(bracket[1])
    if not lo < hi:
        raise ValueError("bracket must satisfy lo < hi")

    def n_bound(delta):
        return len(bound_states(_with_delta(p, delta), basis).bound)

    if n_bound(lo) <= level:
        raise ValueError("level %d is not bound at the lower bracket end" % level)
    if n_bound(hi) > level:
        raise ValueError("level %d is still bound at the upper bracket end" % level)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if n_bound(mid) > level:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
