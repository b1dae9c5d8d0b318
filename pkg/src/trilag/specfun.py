"""Scalar special-function kernels.

Everything here is a small, pure building block used by the matrix-element
formulas: log-gamma, generalized Laguerre polynomial sequences, basis
normalization coefficients, real-argument binomials and terminating Gauss
hypergeometric sums.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln


class PoleError(ValueError):
    """A Pochhammer factor in the denominator vanished with a nonzero numerator."""


@dataclass(frozen=True)
class LaguerreOrder:
    """Degree n and upper index nu of a generalized Laguerre polynomial."""

    n: int
    nu: float

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("polynomial degree must be nonnegative, got %r" % (self.n,))
        if self.nu < 0:
            raise ValueError("upper index nu must be nonnegative, got %r" % (self.nu,))


def log_gamma(x):
    """ln Gamma(x) for x > 0."""
    x = float(x)
    if x <= 0:
        raise ValueError("log_gamma requires x > 0, got %r" % (x,))
    return float(gammaln(x))


def binom_real(a, k):
    """Binomial coefficient a over k with real upper argument.

    Computed as the falling-factorial product a (a-1) ... (a-k+1) / k!,
    which is well defined for any real a and integer k >= 0.
    """
    if k < 0:
        raise ValueError("binom_real requires k >= 0, got %r" % (k,))
    out = 1.0
    for i in range(int(k)):
        out *= (a - i) / (i + 1)
    return out


def laguerre_seq(n_max, nu, x):
    """Values L_0^nu(x) .. L_{n_max}^nu(x) by the upward three-term recurrence.

    x may be a scalar or an ndarray; the result has shape
    (n_max+1,) + shape(x).  The recurrence
    (k+1) L_{k+1} = (2k+nu+1-x) L_k - (k+nu) L_{k-1}
    is stable in the oscillatory region sampled by quadrature nodes.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    x = np.asarray(x)
    dtype = np.result_type(x.dtype, float)
    x = x.astype(dtype)
    L = np.empty((n_max + 1,) + x.shape, dtype=dtype)
    L[0] = 1.0
    if n_max >= 1:
        L[1] = 1.0 + nu - x
    for k in range(1, n_max):
        L[k + 1] = ((2 * k + nu + 1 - x) * L[k] - (k + nu) * L[k - 1]) / (k + 1)
    return L


def norm_coeff(n, nu, lam):
    """Normalization a_n = sqrt(lam Gamma(n+1) / Gamma(n+nu+1)).

    Evaluated through log-gamma differences so it stays finite for
    large n and nu.
    """
    if n < 0 or nu < 0 or lam <= 0:
        raise ValueError("norm_coeff requires n >= 0, nu >= 0, lam > 0")
    return math.sqrt(lam) * math.exp(0.5 * (gammaln(n + 1.0) - gammaln(n + nu + 1.0)))


def hyp2f1_terminating(neg_n, b, c, z):
    """2F1(-neg_n, b; c; z) as an explicit finite sum of neg_n + 1 terms.

    The first parameter is the negative integer -neg_n, so the series
    terminates after neg_n + 1 terms regardless of |z|; no continuation
    is attempted.  Terms are accumulated with compensated summation.

    Raises PoleError if a Pochhammer factor (c)_k vanishes while the
    running numerator is still nonzero.
    """
    neg_n = int(neg_n)
    if neg_n < 0:
        raise ValueError("neg_n must be a nonnegative integer")
    z = complex(z)
    total = 1.0 + 0.0j
    comp = 0.0 + 0.0j
    term = 1.0 + 0.0j
    for k in range(neg_n):
        num = (-neg_n + k) * (b + k)
        den = (c + k) * (k + 1)
        if den == 0:
            if term * num != 0:
                raise PoleError(
                    "2F1 denominator parameter hit a pole: (c)_k = 0 at k=%d" % (k + 1,)
                )
            break
        term = term * num / den * z
        # Kahan update
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total
