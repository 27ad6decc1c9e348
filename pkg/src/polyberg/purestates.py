"""Pure-state functionals on truncated matrix sequences and separation
drivers.

A finite state is a frequency together with a unit vector of the matching
block dimension and evaluates a sequence as the quadratic form of its
block; the limit state returns the scalar boundary value.  Distinct
states are separated by explicit witnesses assembled from the
generating-symbol sequences, except on the two documented families of
state pairs that agree on every single generating sequence, where
separation is refused by construction (the sequence with identity at one
frequency and zeros elsewhere still tells such a pair apart, see
closure_gap_witness).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .gammaseq import MatrixSeq, block_order, gamma_sequence
from .generators import cross_frequency_plan, same_frequency_plan
from .integration import beta_entry
from .symbols import SymbolSpec, indicator_symbol

__all__ = [
    "PureState",
    "finite_state",
    "limit_state",
    "same_pure_state",
    "eval_state",
    "eval_state_integral",
    "witness_indices",
    "NotSeparableError",
    "separate",
    "coincidence_pair",
    "submatrix_coincidence_pair",
    "closure_gap_witness",
]

UNIT_NORM_TOL = 1e-12
PROPORTIONAL_TOL = 1e-10
MIN_GAP = 1e-8


class NotSeparableError(ValueError):
    """The two states coincide, or they agree on every generating
    sequence (documented coincidence families)."""


@dataclass
class PureState:
    """Either a finite state (frequency, unit vector) or the limit state
    (xi is None, u is None)."""

    xi: Optional[int]
    u: Optional[np.ndarray]

    @property
    def is_limit(self) -> bool:
        return self.xi is None


def finite_state(xi: int, u) -> PureState:
    vec = np.asarray(u, dtype=complex)
    if vec.ndim != 1:
        raise ValueError("state vector must be one-dimensional")
    if abs(np.linalg.norm(vec) - 1.0) > UNIT_NORM_TOL:
        raise ValueError(f"state vector must be unit norm, got {np.linalg.norm(vec)}")
    return PureState(xi=int(xi), u=vec)


def limit_state() -> PureState:
    return PureState(xi=None, u=None)


def _proportional(u: np.ndarray, v: np.ndarray) -> bool:
    if u.shape != v.shape:
        return False
    return abs(abs(np.vdot(u, v)) - 1.0) <= PROPORTIONAL_TOL


def same_pure_state(s1: PureState, s2: PureState) -> bool:
    """Equality as functionals: both are the limit state, or they share a
    frequency and their vectors differ by a unimodular factor."""
    if s1.is_limit or s2.is_limit:
        return s1.is_limit and s2.is_limit
    return s1.xi == s2.xi and _proportional(s1.u, s2.u)


def eval_state(s: PureState, a_seq: MatrixSeq):
    """Value of the state on a sequence: quadratic form of the block, or
    the scalar limit for the limit state."""
    if s.is_limit:
        if a_seq.scalar_limit is None:
            raise ValueError("limit state needs a sequence with a scalar limit")
        return a_seq.scalar_limit
    b = a_seq.block(s.xi)
    if b.shape[0] != s.u.shape[0]:
        raise ValueError(
            f"state vector has dimension {s.u.shape[0]}, block has order {b.shape[0]}"
        )
    val = complex(np.vdot(s.u, b @ s.u))
    return val.real if abs(val.imag) < 1e-14 * max(1.0, abs(val)) else val


def eval_state_integral(
    xi: int, u, a: SymbolSpec, n: int, alpha: float
):
    """State value straight from entry integrals, bypassing any stored
    sequence: sum over (j, k) of conj(u_j) u_k times the entry integral.
    Must agree with eval_state on the assembled sequence."""
    vec = np.asarray(u, dtype=complex)
    d = block_order(n, xi)
    if vec.shape != (d,):
        raise ValueError(f"vector must have dimension {d}, got {vec.shape}")
    acc = 0.0 + 0.0j
    for j in range(d):
        for k in range(d):
            acc += np.conj(vec[j]) * vec[k] * beta_entry(a, alpha, xi, j, k)
    return acc.real if abs(acc.imag) < 1e-14 * max(1.0, abs(acc)) else acc


def witness_indices(u, v) -> Tuple[int, int]:
    """Indices (p, q) with u_p conj(u_q) != v_p conj(v_q), found
    constructively for linearly independent unit vectors.

    p is the first index where u is substantially nonzero; if the moduli
    of u_p and v_p differ, (p, p) already works, otherwise q is the first
    index where v deviates from (v_p/u_p) u.
    """
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if u.shape != v.shape:
        raise ValueError("vectors must have equal dimension")
    cross = max(
        abs(u[j] * v[k] - u[k] * v[j])
        for j in range(len(u))
        for k in range(j + 1, len(u))
    ) if len(u) > 1 else 0.0
    if cross <= PROPORTIONAL_TOL:
        raise NotSeparableError("vectors are proportional; states coincide")
    p = next(i for i in range(len(u)) if abs(u[i]) > PROPORTIONAL_TOL)
    if abs(abs(v[p]) - abs(u[p])) > PROPORTIONAL_TOL:
        return p, p
    tau = v[p] / u[p]
    q = next(i for i in range(len(u)) if abs(v[i] - tau * u[i]) > PROPORTIONAL_TOL)
    return p, q


def _coincidence_vector(n: int, alpha: float) -> np.ndarray:
    u = np.zeros(n)
    u[0] = math.sqrt((alpha + 3.0) / (2.0 * (alpha + 2.0)))
    u[1] = math.sqrt((alpha + 1.0) / (2.0 * (alpha + 2.0)))
    return u


def coincidence_pair(n: int, alpha: float) -> Tuple[PureState, PureState]:
    """The documented pair of distinct states that agree on every
    generating sequence: frequency 0 with the two-component vector built
    from alpha, against frequency 2 with the first basis vector."""
    if n < 2:
        raise ValueError("the coincidence construction needs n >= 2")
    u = _coincidence_vector(n, alpha)
    v = np.zeros(n)
    v[0] = 1.0
    return finite_state(0, u), finite_state(2, v)


def submatrix_coincidence_pair(n: int, eta: int) -> Tuple[PureState, PureState]:
    """Second documented family: frequencies -eta and eta with first basis
    vectors agree on every generating sequence, because the negative
    block is a leading principal submatrix of the positive one."""
    if not 1 <= eta <= n - 1:
        raise ValueError(f"eta must lie in [1, {n - 1}], got {eta}")
    u = np.zeros(n - eta)
    u[0] = 1.0
    v = np.zeros(n)
    v[0] = 1.0
    return finite_state(-eta, u), finite_state(eta, v)


def _e0_like(s: PureState) -> bool:
    e0 = np.zeros(s.u.shape[0])
    e0[0] = 1.0
    return _proportional(s.u, e0)


def _is_documented_coincidence(s1: PureState, s2: PureState, n: int, alpha: float) -> bool:
    if s1.is_limit or s2.is_limit:
        return False
    lo, hi = (s1, s2) if s1.xi <= s2.xi else (s2, s1)
    if n >= 2 and (lo.xi, hi.xi) == (0, 2):
        u_star = _coincidence_vector(n, alpha).astype(complex)
        if _proportional(lo.u, u_star) and _e0_like(hi):
            return True
    if lo.xi < 0 and hi.xi == -lo.xi and _e0_like(lo) and _e0_like(hi):
        return True
    return False


def _hermitian_value(s: PureState, x: MatrixSeq) -> float:
    v = eval_state(s, x)
    return v.real if isinstance(v, complex) else v


def separate(
    s1: PureState,
    s2: PureState,
    n: int,
    alpha: float,
    infinity_witness: Optional[SymbolSpec] = None,
) -> Tuple[MatrixSeq, Tuple[float, float]]:
    """Produce a witness sequence on which the two states differ, with the
    pair of state values.

    Same-frequency pairs go through the matrix-unit plans at the indices
    found by witness_indices (off-diagonal units are evaluated through
    their Hermitian and skew-Hermitian combinations); a limit state is
    told apart from any finite state by an indicator symbol; distinct
    finite frequencies use a cross-frequency plan that kills the lower
    block.  Raises NotSeparableError for equal states and for the
    documented coincidence families.
    """
    if same_pure_state(s1, s2):
        raise NotSeparableError("identical pure states")
    if _is_documented_coincidence(s1, s2, n, alpha):
        raise NotSeparableError(
            "not separable by construction: the pair agrees on every "
            "generating sequence (documented coincidence family)"
        )

    if s1.is_limit or s2.is_limit:
        fin = s2 if s1.is_limit else s1
        sym = infinity_witness if infinity_witness is not None else indicator_symbol(0.5)
        if sym.limit is None:
            raise ValueError("infinity witness symbol needs a known boundary limit")
        witness = gamma_sequence(sym, n, alpha, max(fin.xi, 0))
        vals = (eval_state(s1, witness), eval_state(s2, witness))
        _require_gap(vals)
        return witness, vals

    if s1.xi == s2.xi:
        xi = s1.xi
        p, q = witness_indices(s1.u, s2.u)
        if p == q:
            witness = same_frequency_plan(n, alpha, xi, p, p).evaluate(max(xi, 0))
        else:
            a = same_frequency_plan(n, alpha, xi, p, q).evaluate(max(xi, 0))
            b = same_frequency_plan(n, alpha, xi, q, p).evaluate(max(xi, 0))
            sym_part = a + b
            skew_part = 1j * (a + (-1.0) * b)
            gap_sym = abs(
                _hermitian_value(s1, sym_part) - _hermitian_value(s2, sym_part)
            )
            gap_skew = abs(
                _hermitian_value(s1, skew_part) - _hermitian_value(s2, skew_part)
            )
            witness = sym_part if gap_sym >= gap_skew else skew_part
        vals = (_hermitian_value(s1, witness), _hermitian_value(s2, witness))
        _require_gap(vals)
        return witness, vals

    lo, hi = (s1, s2) if s1.xi < s2.xi else (s2, s1)
    p = int(np.argmax(np.abs(hi.u)))
    witness = cross_frequency_plan(n, alpha, lo.xi, hi.xi, p).evaluate(max(hi.xi, 0))
    vals = (_hermitian_value(s1, witness), _hermitian_value(s2, witness))
    _require_gap(vals)
    return witness, vals


def _require_gap(vals) -> None:
    if abs(vals[0] - vals[1]) <= MIN_GAP:
        raise NotSeparableError(
            f"constructed witness produced values {vals[0]} and {vals[1]} "
            f"closer than {MIN_GAP}"
        )


def closure_gap_witness(n: int, alpha: float, xi_max: int) -> MatrixSeq:
    """The sequence with identity at frequency 2 and zero blocks
    elsewhere, scalar limit zero.  It belongs to the limit algebra and
    separates the documented coincidence pair (values 0 and 1), although
    no single generating sequence can."""
    if n < 2:
        raise ValueError("the witness construction needs n >= 2")
    if xi_max < 2:
        raise ValueError(f"xi_max must be at least 2, got {xi_max}")
    blocks = {
        xi: np.zeros((block_order(n, xi), block_order(n, xi)))
        for xi in range(-n + 1, xi_max + 1)
    }
    blocks[2] = np.eye(n)
    return MatrixSeq(n=n, alpha=alpha, blocks=blocks, scalar_limit=0.0)
