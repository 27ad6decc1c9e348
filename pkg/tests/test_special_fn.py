"""Gamma/Beta kernel tests against stdlib and closed-form oracles."""

import math

import numpy as np
import pytest

from polyberg.special_fn import (
    beta,
    binom_bound_holds,
    binom_real,
    log_gamma,
    reg_incomplete_beta,
    wendel_bound_holds,
)


def test_log_gamma_trivial_points():
    assert abs(log_gamma(1.0)) < 1e-13
    assert abs(log_gamma(5.0) - math.log(24.0)) < 1e-13
    # Gamma(1/2) = sqrt(pi)
    assert abs(log_gamma(0.5) - 0.5 * math.log(math.pi)) < 1e-13


def test_log_gamma_matches_stdlib_over_range():
    zs = np.logspace(-3, 6, 4000)
    for z in zs:
        ref = math.lgamma(z)
        assert abs(log_gamma(float(z)) - ref) <= 1e-13 * max(1.0, abs(ref))


def test_log_gamma_domain():
    for bad in (0.0, -1.0, -0.5):
        with pytest.raises(ValueError):
            log_gamma(bad)


def test_beta_closed_forms():
    assert abs(beta(1.0, 1.0) - 1.0) < 1e-14
    assert abs(beta(2.0, 1.0) - 0.5) < 1e-14
    assert abs(beta(2.0, 2.0) - 1.0 / 6.0) < 1e-15


def test_beta_symmetry(rng):
    for _ in range(300):
        x, y = rng.uniform(0.02, 50.0, size=2)
        b1, b2 = beta(float(x), float(y)), beta(float(y), float(x))
        assert abs(b1 - b2) <= 1e-12 * abs(b1)


def test_beta_domain():
    with pytest.raises(ValueError):
        beta(0.0, 1.0)
    with pytest.raises(ValueError):
        beta(1.0, -2.0)


def test_incomplete_beta_endpoints_and_uniform():
    assert reg_incomplete_beta(0.0, 2.3, 4.5) == 0.0
    assert reg_incomplete_beta(1.0, 2.3, 4.5) == 1.0
    assert abs(reg_incomplete_beta(0.25, 1.0, 1.0) - 0.25) < 1e-12


def test_incomplete_beta_closed_forms(rng):
    # I_x(p, 1) = x^p and I_x(1, q) = 1 - (1-x)^q
    for _ in range(200):
        x = float(rng.uniform(0.01, 0.99))
        p = float(rng.uniform(0.2, 20.0))
        assert abs(reg_incomplete_beta(x, p, 1.0) - x**p) < 1e-12
        assert abs(reg_incomplete_beta(x, 1.0, p) - (1.0 - (1.0 - x) ** p)) < 1e-12


def test_incomplete_beta_vs_quadrature_oracle():
    # composite Simpson on a dense grid, fully independent of the
    # continued fraction
    p, q = 2.5, 3.5
    ts = np.linspace(0.0, 0.4, 20001)
    f = ts ** (p - 1.0) * (1.0 - ts) ** (q - 1.0)
    simpson = (ts[1] - ts[0]) / 3.0 * (
        f[0] + f[-1] + 4.0 * f[1:-1:2].sum() + 2.0 * f[2:-1:2].sum()
    )
    want = simpson / beta(p, q)
    assert abs(reg_incomplete_beta(0.4, p, q) - want) < 1e-9


def test_incomplete_beta_symmetry_and_monotonicity(rng):
    for _ in range(100):
        x = float(rng.uniform(0.01, 0.99))
        p, q = rng.uniform(0.3, 15.0, size=2)
        lhs = reg_incomplete_beta(x, float(p), float(q))
        rhs = 1.0 - reg_incomplete_beta(1.0 - x, float(q), float(p))
        assert abs(lhs - rhs) < 1e-12
    prev = -1.0
    for x in np.linspace(0.0, 1.0, 500):
        cur = reg_incomplete_beta(float(x), 3.2, 1.7)
        assert cur >= prev - 1e-14
        prev = cur


def test_incomplete_beta_domain():
    with pytest.raises(ValueError):
        reg_incomplete_beta(-0.1, 1.0, 1.0)
    with pytest.raises(ValueError):
        reg_incomplete_beta(1.1, 1.0, 1.0)
    with pytest.raises(ValueError):
        reg_incomplete_beta(0.5, 0.0, 1.0)


def test_wendel_bound_examples():
    assert wendel_bound_holds(1.0, 1.0)
    assert wendel_bound_holds(10.0, 0.5)
    assert wendel_bound_holds(0.1, 3.0)


def test_binom_bound_examples():
    assert binom_bound_holds(1.0, 0)
    # C(5, 3) = 10 <= 125/6
    assert binom_real(5.0, 3) == pytest.approx(10.0)
    assert binom_bound_holds(2.0, 3)
    assert binom_bound_holds(0.5, 5)


def test_bound_grid(rng):
    for _ in range(1000):
        z = float(rng.uniform(1e-6, 100.0))
        a = float(rng.uniform(1e-6, 10.0))
        k = int(rng.integers(0, 31))
        assert wendel_bound_holds(z, a)
        assert binom_bound_holds(z, k)
