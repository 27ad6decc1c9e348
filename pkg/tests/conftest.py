"""Shared oracles and helpers for the test suite.

The oracles are deliberately independent of the package internals:
classical-recurrence polynomial evaluation, a single high-order
Gauss-Legendre rule for weighted integrals, exact-rational convolution,
and a pseudorandom structured-generator factory.
"""

from fractions import Fraction

import numpy as np
import pytest

from polyberg.integration import weighted_product_integral
from polyberg.jacobi import q_coeffs_exact


def classical_jacobi_recurrence(alpha: float, beta: float, m: int, x):
    """Three-term-recurrence evaluation of the classical degree-m Jacobi
    polynomial on [-1, 1]; completely independent of the monomial path."""
    x = np.asarray(x, dtype=float)
    if m == 0:
        return np.ones_like(x)
    pm1 = np.ones_like(x)
    p = 0.5 * (alpha - beta + (alpha + beta + 2.0) * x)
    if m == 1:
        return p
    for k in range(2, m + 1):
        a1 = 2.0 * k * (k + alpha + beta) * (2.0 * k + alpha + beta - 2.0)
        a2 = (2.0 * k + alpha + beta - 1.0) * (alpha**2 - beta**2)
        a3 = (
            (2.0 * k + alpha + beta - 2.0)
            * (2.0 * k + alpha + beta - 1.0)
            * (2.0 * k + alpha + beta)
        )
        a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + alpha + beta)
        p, pm1 = ((a2 + a3 * x) * p - a4 * pm1) / a1, p
    return p


def shifted_jacobi_oracle(alpha: float, beta: float, m: int, t):
    """Shifted polynomial on (0, 1) through the recurrence oracle."""
    return classical_jacobi_recurrence(alpha, beta, m, 2.0 * np.asarray(t) - 1.0)


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(240)
_GL01_NODES = 0.5 * (_GL_NODES + 1.0)
_GL01_WEIGHTS = 0.5 * _GL_WEIGHTS


def quadrature_01(f) -> float:
    """Single 240-point Gauss-Legendre rule on [0, 1]; independent of the
    package's composite panels."""
    return float(np.sum(_GL01_WEIGHTS * f(_GL01_NODES)))


def weighted_quadrature(alpha: float, beta: int, h) -> float:
    """Integral of (1-t)^alpha t^beta h(t) over [0, 1] by Gauss-Legendre
    after the substitution t = 1 - u^2, which turns the (1-t)^alpha
    endpoint factor into u^(2 alpha + 1); exact-grade for polynomial h
    whenever 2 alpha is an integer."""
    u = _GL01_NODES
    t = 1.0 - u * u
    vals = 2.0 * u ** (2.0 * alpha + 1.0) * t**beta * h(t)
    return float(np.sum(_GL01_WEIGHTS * vals))


def conv_exact(u, v):
    out = [Fraction(0)] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        for j, b in enumerate(v):
            out[i + j] += a * b
    return out


def exact_pair_integral(alpha: float, beta: int, p: int, q: int) -> float:
    """Weighted inner product of the two shifted polynomials, computed
    through exact rational convolution and the exact moments."""
    conv = conv_exact(q_coeffs_exact(alpha, beta, p), q_coeffs_exact(alpha, beta, q))
    return weighted_product_integral(conv, alpha, beta)


def random_antitriangular_generators(n: int, seed: int, symmetric: bool = False):
    """Generator family with forced structure: zero above the shifted
    antidiagonal, magnitudes on it bounded away from zero (a numerically
    meaningful 'nonzero'), free entries uniform in [-1, 1]."""
    rng = np.random.default_rng(seed)
    gs = []
    for p in range(n):
        g = np.zeros((n, n))
        for j in range(n):
            for k in range(j if symmetric else 0, n):
                s = j + k
                if s > n - 1 + p:
                    g[j, k] = rng.uniform(-1.0, 1.0)
                elif s == n - 1 + p:
                    g[j, k] = rng.choice([-1.0, 1.0]) * rng.uniform(0.2, 1.2)
                if symmetric:
                    g[k, j] = g[j, k]
        gs.append(g)
    return gs


def unit(v) -> np.ndarray:
    v = np.asarray(v, dtype=complex)
    return v / np.linalg.norm(v)


@pytest.fixture
def rng():
    return np.random.default_rng(0)
