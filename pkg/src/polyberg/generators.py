"""Antitriangular structure tests, matrix units from structured generators,
and symbolic separation plans.

A square matrix is "p-antitriangular" when every entry strictly above the
p-th antidiagonal (j + k < p) vanishes and every entry on that
antidiagonal (j + k = p) does not.  A family G_0, ..., G_{d-1} in which
G_q is (d-1+q)-antitriangular supports an explicit recursion producing
coefficients nu[p][j] such that products of the G's reassemble every
matrix unit E_{p,q}.  Plans package that recipe symbolically over the
generating-symbol sequences so one plan can be evaluated at any
truncation.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .gammaseq import MatrixSeq, block_order, frequencies, gamma_matrix
from .symbols import make_gp

__all__ = [
    "AntitriangularReport",
    "antitriangular_report",
    "GeneratorStructureError",
    "NuTable",
    "nu_table",
    "matrix_unit",
    "SeparationPlan",
    "same_frequency_plan",
    "cross_frequency_plan",
    "generator_block",
]

TOL_ZERO = 1e-10
TOL_NONZERO = 1e-8


@dataclass(frozen=True)
class AntitriangularReport:
    p: int
    below_max: float
    anti_min: float
    scale: float
    holds: bool


def antitriangular_report(
    m: np.ndarray,
    p: int,
    tol_zero: float = TOL_ZERO,
    tol_nonzero: float = TOL_NONZERO,
) -> AntitriangularReport:
    """Check p-antitriangularity with tolerances relative to the matrix
    scale (largest entry magnitude, or 1 for the zero matrix).

    For p beyond the last antidiagonal there are no on-diagonal entries
    and the report holds exactly when the whole matrix is numerically
    zero.
    """
    m = np.asarray(m)
    d = m.shape[0]
    mags = np.abs(m)
    scale = float(mags.max()) if mags.size and mags.max() > 0.0 else 1.0
    below = [mags[j, k] for j in range(d) for k in range(d) if j + k < p]
    on = [mags[j, k] for j in range(d) for k in range(d) if j + k == p]
    below_max = max(below) if below else 0.0
    anti_min = min(on) if on else math.inf
    holds = below_max < tol_zero * scale and anti_min > tol_nonzero * scale
    return AntitriangularReport(
        p=p, below_max=float(below_max), anti_min=float(anti_min),
        scale=scale, holds=holds,
    )


class GeneratorStructureError(ValueError):
    """A generator family violates the structural preconditions; the
    message names the failed condition and the offending entry."""


def _check_generator_structure(
    gs: Sequence[np.ndarray], tol_zero: float, tol_nonzero: float
) -> None:
    d = gs[0].shape[0]
    if len(gs) != d or any(g.shape != (d, d) for g in gs):
        raise GeneratorStructureError(
            f"need exactly {d} square matrices of order {d}"
        )
    last = np.abs(gs[d - 1])
    scale = last.max() if last.max() > 0 else 1.0
    corner = last[d - 1, d - 1]
    if corner <= tol_nonzero * scale:
        raise GeneratorStructureError(
            f"last generator: corner entry ({d-1},{d-1}) = {corner:.3e} "
            "is not a nonzero multiple"
        )
    off = last.copy()
    off[d - 1, d - 1] = 0.0
    j, k = np.unravel_index(np.argmax(off), off.shape)
    if off[j, k] >= tol_zero * scale:
        raise GeneratorStructureError(
            f"last generator: entry ({j},{k}) = {off[j, k]:.3e} must vanish"
        )
    for p in range(d - 1):
        row = np.abs(gs[p][d - 1, :])
        row_scale = row.max() if row.max() > 0 else 1.0
        if row[p] <= tol_nonzero * row_scale:
            raise GeneratorStructureError(
                f"generator {p}: row entry ({d-1},{p}) = {row[p]:.3e} "
                "must be nonzero"
            )
        for k in range(p):
            if row[k] >= tol_zero * row_scale:
                raise GeneratorStructureError(
                    f"generator {p}: row entry ({d-1},{k}) = {row[k]:.3e} "
                    "must vanish"
                )


@dataclass
class NuTable:
    """Upper-triangular coefficient table nu[p][j], 0 <= p <= j <= d-1."""

    order: int
    nu: np.ndarray
    is_real: bool

    def row(self, p: int) -> np.ndarray:
        return self.nu[p]


def nu_table(
    gs: Sequence[np.ndarray],
    tol_zero: float = TOL_ZERO,
    tol_nonzero: float = TOL_NONZERO,
) -> NuTable:
    """Coefficients of the descending matrix-unit recursion.

    With c = corner entry of the last generator and r_p = last row of
    generator p:
        nu[d-1][d-1] = 1 / c^2
        nu[p][p]     = 1 / (r_p[p] * c)
        nu[p][j]     = -(1 / r_p[p]) * sum_{q=p+1..j} nu[q][j] * r_p[q]
    """
    gs = [np.asarray(g) for g in gs]
    _check_generator_structure(gs, tol_zero, tol_nonzero)
    d = gs[0].shape[0]
    is_real = all(not np.iscomplexobj(g) for g in gs)
    nu = np.zeros((d, d), dtype=float if is_real else complex)
    corner = gs[d - 1][d - 1, d - 1]
    nu[d - 1, d - 1] = 1.0 / corner**2
    for p in range(d - 2, -1, -1):
        row = gs[p][d - 1, :]
        nu[p, p] = 1.0 / (row[p] * corner)
        for j in range(p + 1, d):
            nu[p, j] = -sum(nu[q, j] * row[q] for q in range(p + 1, j + 1)) / row[p]
    return NuTable(order=d, nu=nu, is_real=is_real)


def matrix_unit(
    gs: Sequence[np.ndarray], table: NuTable, p: int, q: int
) -> np.ndarray:
    """Reassemble the matrix unit E_{p,q} from the generator family.

    Real symmetric families use the simplified product
    (sum nu[p][j] G_j) G_last^2 (sum nu[q][k] G_k); the general form
    conjugates the left factor.
    """
    gs = [np.asarray(g) for g in gs]
    d = table.order
    right = sum(table.nu[q, k] * gs[k] for k in range(q, d))
    real_symmetric = table.is_real and all(
        np.array_equal(g, g.T) for g in gs
    )
    if real_symmetric:
        left = sum(table.nu[p, j] * gs[j] for j in range(p, d))
        return left @ gs[d - 1] @ gs[d - 1] @ right
    left = sum(np.conj(table.nu[p, j]) * gs[j].conj().T for j in range(p, d))
    return left @ gs[d - 1].conj().T @ gs[d - 1] @ right


@lru_cache(maxsize=None)
def generator_block(n: int, alpha: float, xi: int, p: int) -> np.ndarray:
    """Cached block at frequency xi of the sequence for generating symbol
    number p.  Read-only: callers must not mutate the returned array."""
    m = gamma_matrix(make_gp(p, alpha), n, alpha, xi)
    m.flags.writeable = False
    return m


@dataclass(frozen=True)
class SeparationPlan:
    """Symbolic recipe (sum_j c_j A_{k_j}) * A_mid^2 * (sum_j c'_j A_{k'_j})
    over the generating-symbol sequences A_k; evaluable at any truncation."""

    n: int
    alpha: float
    left: tuple            # ((coeff, symbol_index), ...)
    middle: int
    right: tuple

    def evaluate(self, xi_max: int) -> MatrixSeq:
        if xi_max < 0:
            raise ValueError(f"xi_max must be nonnegative, got {xi_max}")
        freqs = list(frequencies(self.n, xi_max))
        blocks = {}
        for xi in freqs:
            left = sum(
                c * generator_block(self.n, self.alpha, xi, k) for c, k in self.left
            )
            right = sum(
                c * generator_block(self.n, self.alpha, xi, k) for c, k in self.right
            )
            mid = generator_block(self.n, self.alpha, xi, self.middle)
            blocks[xi] = left @ mid @ mid @ right
        lims = {k: make_gp(k, self.alpha).limit for _, k in self.left + self.right}
        lims[self.middle] = make_gp(self.middle, self.alpha).limit
        lim = (
            sum(c * lims[k] for c, k in self.left)
            * lims[self.middle] ** 2
            * sum(c * lims[k] for c, k in self.right)
        )
        return MatrixSeq(n=self.n, alpha=self.alpha, blocks=blocks, scalar_limit=lim)

    def to_json_obj(self) -> dict:
        return {
            "left": [[c, k] for c, k in self.left],
            "middle": self.middle,
            "right": [[c, k] for c, k in self.right],
            "n": self.n,
            "alpha": self.alpha,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def _plan_from_generators(
    n: int,
    alpha: float,
    freq: int,
    symbol_indices: Sequence[int],
    p: int,
    q: int,
    tol_zero: float,
    tol_nonzero: float,
) -> SeparationPlan:
    gs = [generator_block(n, alpha, freq, s) for s in symbol_indices]
    table = nu_table(gs, tol_zero=tol_zero, tol_nonzero=tol_nonzero)
    d = table.order
    left = tuple((float(table.nu[p, j]), symbol_indices[j]) for j in range(p, d))
    right = tuple((float(table.nu[q, j]), symbol_indices[j]) for j in range(q, d))
    return SeparationPlan(
        n=n, alpha=alpha, left=left, middle=symbol_indices[-1], right=right
    )


def same_frequency_plan(
    n: int,
    alpha: float,
    xi: int,
    p: int,
    q: int,
    tol_zero: float = TOL_ZERO,
    tol_nonzero: float = TOL_NONZERO,
) -> SeparationPlan:
    """Plan whose evaluation X has X_xi equal to the matrix unit E_{p,q}
    (order min(n+xi, n))."""
    d = block_order(n, xi)
    if not (0 <= p < d and 0 <= q < d):
        raise ValueError(f"unit indices must lie in [0, {d}), got ({p}, {q})")
    symbol_indices = [d - 1 + abs(xi) + j for j in range(d)]
    return _plan_from_generators(
        n, alpha, xi, symbol_indices, p, q, tol_zero, tol_nonzero
    )


def cross_frequency_plan(
    n: int,
    alpha: float,
    xi: int,
    eta: int,
    p: int,
    tol_zero: float = TOL_ZERO,
    tol_nonzero: float = TOL_NONZERO,
) -> SeparationPlan:
    """Plan whose evaluation X has X_eta = E_{p,p} while X_xi is the zero
    block (xi < eta).

    The generator symbols are chosen so that the squared middle factor is
    a sequence whose block at xi vanishes identically: its structural
    index exceeds the last antidiagonal of the order-min(n+xi, n) block.
    Both-negative frequencies draw generators from a lower symbol range
    than the other three sign patterns.
    """
    if xi >= eta:
        raise ValueError(f"need xi < eta, got ({xi}, {eta})")
    block_order(n, xi)  # validates xi membership
    d_eta = block_order(n, eta)
    if not 0 <= p < d_eta:
        raise ValueError(f"unit index must lie in [0, {d_eta}), got {p}")
    if eta < 0:
        symbol_indices = [n - 1 + j for j in range(d_eta)]
    else:
        symbol_indices = [n - 1 + eta + j for j in range(d_eta)]
    return _plan_from_generators(
        n, alpha, eta, symbol_indices, p, p, tol_zero, tol_nonzero
    )
