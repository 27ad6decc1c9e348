"""Shifted Jacobi polynomials on (0, 1) and their L2-normalized functions.

The polynomials are kept in monomial form (degree <= 64).  Coefficients
and squared normalization constants are built in exact rational
arithmetic relative to the binary value of the weight exponents, which is
what lets the downstream moment integration produce exact zeros where
orthogonality demands them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .special_fn import log_gamma

__all__ = [
    "MAX_DEGREE",
    "JacobiParams",
    "q_coeffs",
    "q_coeffs_exact",
    "q_eval",
    "jac_norm_coeff",
    "norm_coeff_sq_exact",
    "jac_fn_eval",
    "jac_sup_bound",
]

MAX_DEGREE = 64


@dataclass(frozen=True)
class JacobiParams:
    """Weight exponents and degree: weight (1-t)^alpha t^beta, degree m."""

    alpha: float
    beta: float
    m: int

    def __post_init__(self) -> None:
        if not self.alpha > -1.0:
            raise ValueError(f"alpha must exceed -1, got {self.alpha}")
        if not self.beta > -1.0:
            raise ValueError(f"beta must exceed -1, got {self.beta}")
        if self.m < 0:
            raise ValueError(f"degree must be nonnegative, got {self.m}")


def _binom_exact(upper: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out = out * (upper - i) / (i + 1)
    return out


@lru_cache(maxsize=None)
def _q_coeffs_cached(alpha: float, beta: float, m: int) -> tuple[Fraction, ...]:
    a = Fraction(alpha)
    b = Fraction(beta)
    return tuple(
        _binom_exact(a + b + m + k, k)
        * _binom_exact(b + m, m - k)
        * (-1) ** (m - k)
        for k in range(m + 1)
    )


def q_coeffs_exact(alpha: float, beta: float, m: int) -> tuple[Fraction, ...]:
    """Monomial coefficients of the degree-m polynomial, exact rationals.

    Coefficient of t^k is C(alpha+beta+m+k, k) C(beta+m, m-k) (-1)^(m-k),
    with the generalized binomials expanded as falling-factorial products.
    """
    if m > MAX_DEGREE:
        raise ValueError(f"degree {m} exceeds supported maximum {MAX_DEGREE}")
    if m < 0:
        raise ValueError(f"degree must be nonnegative, got {m}")
    return _q_coeffs_cached(float(alpha), float(beta), int(m))


def q_coeffs(p: JacobiParams) -> np.ndarray:
    """Monomial coefficients as floats, index = power of t."""
    return np.array(
        [float(c) for c in q_coeffs_exact(p.alpha, p.beta, p.m)], dtype=float
    )


def compensated_poly_eval(coeffs, t):
    """Monomial-sum evaluation with Kahan-compensated accumulation;
    elementwise over scalar or array t."""
    one = t * 0 + 1.0
    acc = coeffs[0] * one
    comp = t * 0.0
    power = one
    for c in coeffs[1:]:
        power = power * t
        term = c * power - comp
        new = acc + term
        comp = (new - acc) - term
        acc = new
    return acc


def q_eval(p: JacobiParams, t):
    """Evaluate the shifted polynomial at t in [0, 1] (scalar or array)."""
    return compensated_poly_eval(q_coeffs(p), t)


@lru_cache(maxsize=None)
def _norm_sq_int_beta(alpha: float, beta: int, m: int) -> Fraction:
    # (2m+a+b+1) Gamma(m+a+b+1) m! / (Gamma(m+a+1) Gamma(m+b+1)); the two
    # Gamma ratios telescope for integer b.
    a = Fraction(alpha)
    out = Fraction(2 * m) + a + beta + 1
    for i in range(1, beta + 1):
        out = out * (m + a + i) / (m + i)
    return out


def norm_coeff_sq_exact(alpha: float, beta: int, m: int) -> Fraction:
    """Squared normalization constant as an exact rational (integer beta)."""
    if beta < 0:
        raise ValueError(f"integer beta must be nonnegative, got {beta}")
    return _norm_sq_int_beta(float(alpha), int(beta), int(m))


def jac_norm_coeff(p: JacobiParams) -> float:
    """Normalization constant making the weighted polynomial unit-norm.

    sqrt((2m+alpha+beta+1) Gamma(m+alpha+beta+1) m!
         / (Gamma(m+alpha+1) Gamma(m+beta+1))).
    """
    if float(p.beta).is_integer() and p.beta >= 0:
        return math.sqrt(float(norm_coeff_sq_exact(p.alpha, int(p.beta), p.m)))
    log_sq = (
        math.log(2 * p.m + p.alpha + p.beta + 1)
        + log_gamma(p.m + p.alpha + p.beta + 1)
        + log_gamma(p.m + 1)
        - log_gamma(p.m + p.alpha + 1)
        - log_gamma(p.m + p.beta + 1)
    )
    return math.exp(0.5 * log_sq)


def jac_fn_eval(p: JacobiParams, t):
    """Orthonormal weighted value k (1-t)^(alpha/2) t^(beta/2) Q(t).

    t may be a scalar or array in (0, 1); an endpoint is allowed only when
    the corresponding half-exponent is nonnegative.
    """
    arr = np.asarray(t, dtype=float)
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise ValueError("t must lie in [0, 1]")
    if p.beta < 0 and np.any(arr == 0.0):
        raise ValueError("t = 0 not allowed for negative beta")
    if p.alpha < 0 and np.any(arr == 1.0):
        raise ValueError("t = 1 not allowed for negative alpha")
    k = jac_norm_coeff(p)
    vals = k * (1.0 - arr) ** (p.alpha / 2.0) * arr ** (p.beta / 2.0) * q_eval(p, arr)
    if np.isscalar(t) or getattr(t, "ndim", 1) == 0:
        return float(vals)
    return vals


def jac_sup_bound(p: JacobiParams, x: float) -> float:
    """Upper bound for sup |weighted function| on [0, x], valid for alpha > 0.

    Returns (2m+alpha+beta+1)^(m+1+(alpha+1)/2) * x^(beta/2).  For
    alpha <= 0 no proven bound of this shape is available and the call is
    refused.
    """
    if p.alpha <= 0.0:
        raise ValueError(
            f"sup bound is only established for alpha > 0; got alpha={p.alpha}"
        )
    if not 0.0 < x < 1.0:
        raise ValueError(f"x must lie in (0, 1), got {x}")
    base = 2 * p.m + p.alpha + p.beta + 1
    return base ** (p.m + 1 + (p.alpha + 1) / 2.0) * x ** (p.beta / 2.0)
