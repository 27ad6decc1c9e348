"""Entry integrals of symbols against pairs of normalized Jacobi functions.

The default path for closed-form symbols is exact: polynomial products
are convolved in rational arithmetic and contracted against exact
rational weight moments, so every orthogonality relation the entries
inherit holds to the last bit (zeros come out as literal 0.0).  Indicator
symbols use truncated moments through the regularized incomplete Beta;
sampled symbols fall back to composite Gauss-Legendre quadrature.

The moment caches are the only shared state; entries are deterministic
functions of their keys, so concurrent reads/inserts always agree
bitwise.
"""

from __future__ import annotations

import math
import warnings
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import jacobi
from .special_fn import reg_incomplete_beta
from .symbols import SymbolSpec, eval_at_t

__all__ = [
    "MomentKey",
    "moment",
    "truncated_moment",
    "beta_entry",
    "weighted_product_integral",
    "norm_product",
]

MAX_MOMENT_DEGREE = 192

GL_PANELS = 256
# 4-point Gauss-Legendre nodes/weights on [-1, 1]
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(4)


class MomentKey(NamedTuple):
    k: int
    alpha: float
    xi_abs: int


@lru_cache(maxsize=None)
def _moment_exact(degree: int, alpha: float) -> Fraction:
    # integral of t^degree (1-t)^alpha over [0, 1]
    #   = degree! / prod_{i=1..degree+1} (alpha + i)
    if degree == 0:
        return 1 / (Fraction(alpha) + 1)
    return _moment_exact(degree - 1, alpha) * degree / (Fraction(alpha) + degree + 1)


def _check_key(key: MomentKey) -> None:
    if key.k < 0 or key.xi_abs < 0:
        raise ValueError(f"moment indices must be nonnegative, got {key}")
    if key.k + key.xi_abs > MAX_MOMENT_DEGREE:
        raise ValueError(
            f"moment degree {key.k + key.xi_abs} exceeds guard {MAX_MOMENT_DEGREE}"
        )
    if not key.alpha > -1.0:
        raise ValueError(f"alpha must exceed -1, got {key.alpha}")


@lru_cache(maxsize=None)
def _moment_float(degree: int, alpha: float) -> float:
    return float(_moment_exact(degree, alpha))


def moment(key: MomentKey) -> float:
    """Weight moment: integral of t^(k+xi_abs) (1-t)^alpha over [0, 1]."""
    key = MomentKey(*key)
    _check_key(key)
    return _moment_float(key.k + key.xi_abs, key.alpha)


@lru_cache(maxsize=None)
def _truncated_moment_float(degree: int, alpha: float, x: float) -> float:
    full = _moment_float(degree, alpha)
    return full * reg_incomplete_beta(x, degree + 1, alpha + 1.0)


def truncated_moment(key: MomentKey, x: float) -> float:
    """Partial weight moment over [0, x]."""
    key = MomentKey(*key)
    _check_key(key)
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"truncation point must lie in [0, 1], got {x}")
    if x == 0.0:
        return 0.0
    return _truncated_moment_float(key.k + key.xi_abs, key.alpha, float(x))


@lru_cache(maxsize=None)
def _pair_coeffs(alpha: float, xi_abs: int, j: int, k: int) -> tuple[Fraction, ...]:
    # coefficients of Q_j * Q_k for the (alpha, xi_abs) weight
    cj = jacobi.q_coeffs_exact(alpha, float(xi_abs), j)
    ck = jacobi.q_coeffs_exact(alpha, float(xi_abs), k)
    out = [Fraction(0)] * (j + k + 1)
    for i, a in enumerate(cj):
        for l, b in enumerate(ck):
            out[i + l] += a * b
    return tuple(out)


@lru_cache(maxsize=None)
def norm_product(alpha: float, xi_abs: int, j: int, k: int) -> float:
    """Product of the two normalization constants for indices j and k."""
    return math.sqrt(
        float(
            jacobi.norm_coeff_sq_exact(alpha, xi_abs, j)
            * jacobi.norm_coeff_sq_exact(alpha, xi_abs, k)
        )
    )


def _conv_fraction(u: tuple, v: tuple) -> list:
    out = [Fraction(0)] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        for l, b in enumerate(v):
            out[i + l] += a * b
    return out


def weighted_product_integral(coeffs, alpha: float, xi_abs: int) -> float:
    """Exact integral of a real-coefficient polynomial against the
    (alpha, xi_abs) weight: sum of coeffs[d] * moment(d).  Coefficients
    may be floats or exact rationals."""
    acc = Fraction(0)
    for d, c in enumerate(coeffs):
        if c:
            frac = c if isinstance(c, Fraction) else Fraction(float(c))
            acc += frac * _moment_exact(d + xi_abs, alpha)
    return float(acc)


def _guard_degree(degree: int) -> None:
    if degree > MAX_MOMENT_DEGREE:
        raise ValueError(
            f"moment degree {degree} exceeds guard {MAX_MOMENT_DEGREE}"
        )


def _poly_entry_exact(a_coeffs, alpha: float, xi_abs: int, j: int, k: int) -> float:
    pair = _pair_coeffs(alpha, xi_abs, j, k)
    frac = [
        c if isinstance(c, Fraction) else Fraction(float(c)) for c in a_coeffs
    ]
    full = _conv_fraction(pair, tuple(frac))
    _guard_degree(len(full) - 1 + xi_abs)
    acc = Fraction(0)
    for d, c in enumerate(full):
        if c:
            acc += c * _moment_exact(d + xi_abs, alpha)
    return float(acc)


def _indicator_entry(s: float, alpha: float, xi_abs: int, j: int, k: int) -> float:
    x = s * s
    pair = _pair_coeffs(alpha, xi_abs, j, k)
    _guard_degree(len(pair) - 1 + xi_abs)
    terms = [
        float(c) * _truncated_moment_float(d + xi_abs, alpha, x)
        for d, c in enumerate(pair)
        if c
    ]
    return math.fsum(terms)


def _panel_edges(n_panels: int, breakpoint: float | None = None) -> np.ndarray:
    if breakpoint is None or not 0.0 < breakpoint < 1.0:
        return np.linspace(0.0, 1.0, n_panels + 1)
    left = min(max(int(round(n_panels * breakpoint)), 1), n_panels - 1)
    return np.concatenate(
        [
            np.linspace(0.0, breakpoint, left + 1),
            np.linspace(breakpoint, 1.0, n_panels - left + 1)[1:],
        ]
    )


def gauss_legendre_grid(n_panels: int, breakpoint: float | None = None):
    """Composite 4-point Gauss-Legendre nodes and weights on [0, 1].

    If a breakpoint is supplied the panel edges are aligned with it so
    integrands with a jump there stay panelwise smooth.
    """
    edges = _panel_edges(n_panels, breakpoint)
    lo, hi = edges[:-1], edges[1:]
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    nodes = (mid[:, None] + half[:, None] * _GL_NODES[None, :]).ravel()
    weights = (half[:, None] * _GL_WEIGHTS[None, :]).ravel()
    return nodes, weights


def _sampled_entry(a: SymbolSpec, alpha: float, xi_abs: int, j: int, k: int):
    if alpha < 0.0:
        warnings.warn(
            "sampled-symbol quadrature with alpha < 0 has an endpoint "
            "singularity; accuracy is degraded",
            RuntimeWarning,
            stacklevel=3,
        )
    nodes, weights = gauss_legendre_grid(GL_PANELS)
    pj = jacobi.JacobiParams(alpha, float(xi_abs), j)
    pk = jacobi.JacobiParams(alpha, float(xi_abs), k)
    integrand = (
        eval_at_t(a, nodes)
        * jacobi.q_eval(pj, nodes)
        * jacobi.q_eval(pk, nodes)
        * (1.0 - nodes) ** alpha
        * nodes**xi_abs
    )
    return np.sum(weights * integrand)


def beta_entry(a: SymbolSpec, alpha: float, xi: int, j: int, k: int):
    """Entry integral of symbol a for frequency xi and indices (j, k):
    the product of normalization constants times the integral of
    a(sqrt(t)) Q_j(t) Q_k(t) (1-t)^alpha t^|xi|.

    Closed-form symbols are integrated exactly; sampled symbols by
    composite quadrature.  The (j, k) and (k, j) calls share one code
    path, so symmetry is exact.
    """
    if not alpha > -1.0:
        raise ValueError(f"alpha must exceed -1, got {alpha}")
    if j < 0 or k < 0:
        raise ValueError(f"indices must be nonnegative, got ({j}, {k})")
    if k < j:
        j, k = k, j
    xi_abs = abs(int(xi))
    kk = norm_product(alpha, xi_abs, j, k)

    if a.kind == "const":
        v = a.value
        base = _poly_entry_exact((1.0,), alpha, xi_abs, j, k)
        return kk * base * v
    if a.kind == "jacobi_g":
        # rebuild the generator coefficients as exact rationals; the
        # float-rounded copies stored for pointwise evaluation would
        # contaminate the structural zeros at high degree
        exact = jacobi.q_coeffs_exact(a.alpha, 0.0, a.p)
        return kk * _poly_entry_exact(exact, alpha, xi_abs, j, k)
    if a.kind == "poly_t":
        coeffs = a.coeffs
        if any(isinstance(c, complex) for c in coeffs):
            re = _poly_entry_exact([complex(c).real for c in coeffs], alpha, xi_abs, j, k)
            im = _poly_entry_exact([complex(c).imag for c in coeffs], alpha, xi_abs, j, k)
            return kk * complex(re, im)
        return kk * _poly_entry_exact(coeffs, alpha, xi_abs, j, k)
    if a.kind == "indicator":
        return kk * _indicator_entry(a.s, alpha, xi_abs, j, k)
    if a.kind == "sampled":
        val = _sampled_entry(a, alpha, xi_abs, j, k)
        out = kk * val
        return complex(out) if np.iscomplexobj(np.asarray(val)) else float(out)
    raise ValueError(f"unknown symbol kind {a.kind!r}")
