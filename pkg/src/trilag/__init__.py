"""Bound-state spectra of 2D radial Schrodinger problems in a Laguerre basis.

The basis renders the reference Hamiltonian and the overlap tridiagonal
while three potential families (screened Coulomb / Yukawa, Kratzer,
generalized Morse) keep closed-form potential matrices, so spectra reduce
to a symmetric-definite generalized eigenproblem.  A generalized
Gauss-Laguerre quadrature oracle independently validates every analytic
matrix element.
"""

from .basis import BasisSpec, h0_matrix, overlap_matrix
from .eigen import NotPositiveDefiniteError, Pencil, cholesky, solve_pencil
from .potentials import (
    KratzerParams,
    MorseParams,
    YukawaParams,
    exp_element,
    exp_matrix,
    kratzer_matrix,
    morse_matrix,
    oracle_weight_nu,
    radial_function,
    yukawa_element,
    yukawa_matrix,
)
from .quadrature import QuadRule, gauss_laguerre_rule, quad_matrix_element, quad_potential_matrix
from .solver import (
    ConvergenceTable,
    PlateauReport,
    SpectrumResult,
    bound_states,
    converge_in_n,
    critical_screening,
    kratzer_exact,
    lambda_scan,
    potential_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BasisSpec",
    "ConvergenceTable",
    "KratzerParams",
    "MorseParams",
    "NotPositiveDefiniteError",
    "Pencil",
    "PlateauReport",
    "QuadRule",
    "SpectrumResult",
    "YukawaParams",
    "bound_states",
    "cholesky",
    "converge_in_n",
    "critical_screening",
    "exp_element",
    "exp_matrix",
    "gauss_laguerre_rule",
    "h0_matrix",
    "kratzer_exact",
    "kratzer_matrix",
    "lambda_scan",
    "morse_matrix",
    "oracle_weight_nu",
    "overlap_matrix",
    "potential_matrix",
    "quad_matrix_element",
    "quad_potential_matrix",
    "radial_function",
    "solve_pencil",
    "yukawa_element",
    "yukawa_matrix",
]
