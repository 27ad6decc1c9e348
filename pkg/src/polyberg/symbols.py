"""Radial generating symbols on [0, 1), stored in the t = r^2 variable.

A symbol is the radial profile a(r) of a bounded radial function on the
unit disk.  All entry integrals downstream are taken in t = r^2, so the
stored data is whatever makes a(sqrt(t)) directly evaluable: a constant,
the indicator of [0, s) in r, a polynomial in t, a generating Jacobi
polynomial symbol, or a sampled table with linear interpolation.
Instances are immutable after construction and freely shareable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .jacobi import compensated_poly_eval, q_coeffs_exact

__all__ = [
    "SymbolSpec",
    "const_symbol",
    "indicator_symbol",
    "poly_t_symbol",
    "make_gp",
    "sampled_symbol",
    "eval_at_t",
    "boundary_limit",
    "sup_abs",
    "symbol_to_json_obj",
    "symbol_from_json_obj",
]

KINDS = ("const", "indicator", "poly_t", "jacobi_g", "sampled")


@dataclass(frozen=True)
class SymbolSpec:
    kind: str
    value: Optional[complex] = None          # const
    s: Optional[float] = None                # indicator threshold in r
    coeffs: Optional[tuple] = None           # poly_t / jacobi_g, powers of t
    p: Optional[int] = None                  # jacobi_g degree
    alpha: Optional[float] = None            # jacobi_g weight exponent
    points: Optional[tuple] = None           # sampled: ((t, value), ...)
    limit: Optional[complex] = None          # boundary value at r -> 1

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown symbol kind {self.kind!r}")


def _as_scalar(v):
    v = complex(v)
    return v.real if v.imag == 0.0 else v


def const_symbol(value) -> SymbolSpec:
    v = _as_scalar(value)
    return SymbolSpec(kind="const", value=v, limit=v)


def indicator_symbol(s: float) -> SymbolSpec:
    """Indicator of [0, s) in the r variable; 1 iff t < s^2."""
    if not 0.0 < s < 1.0:
        raise ValueError(f"indicator threshold must lie in (0, 1), got {s}")
    return SymbolSpec(kind="indicator", s=float(s), limit=0.0)


def poly_t_symbol(coeffs: Sequence) -> SymbolSpec:
    """Polynomial in t: a(sqrt(t)) = sum coeffs[k] t^k."""
    cs = tuple(_as_scalar(c) for c in coeffs)
    if not cs:
        raise ValueError("polynomial symbol needs at least one coefficient")
    lim = _as_scalar(sum(cs))
    return SymbolSpec(kind="poly_t", coeffs=cs, limit=lim)


def make_gp(p: int, alpha: float) -> SymbolSpec:
    """Generating symbol number p: the degree-p polynomial for the
    (alpha, 0) weight, composed with r^2 (so in t it is the polynomial
    itself).  Its boundary value is the polynomial at t = 1, computed in
    closed form as a product rather than by summing large alternating
    coefficients.
    """
    if p < 0:
        raise ValueError(f"generator index must be nonnegative, got {p}")
    exact = q_coeffs_exact(alpha, 0.0, p)
    # value at t=1 equals C(alpha+p, p)
    a = Fraction(alpha)
    lim = Fraction(1)
    for i in range(1, p + 1):
        lim = lim * (a + i) / i
    return SymbolSpec(
        kind="jacobi_g",
        coeffs=tuple(float(c) for c in exact),
        p=int(p),
        alpha=float(alpha),
        limit=float(lim),
    )


def sampled_symbol(points: Sequence, limit=None) -> SymbolSpec:
    """Tabulated symbol; linear interpolation in t, constant beyond the
    last node.  Excluded from the exact-integration guarantees."""
    pts = tuple((float(t), _as_scalar(v)) for t, v in points)
    if len(pts) < 2:
        raise ValueError("sampled symbol needs at least two points")
    ts = [t for t, _ in pts]
    if any(b <= a for a, b in zip(ts, ts[1:])):
        raise ValueError("sampled t-values must be strictly increasing")
    if ts[0] < 0.0 or ts[-1] >= 1.0:
        raise ValueError("sampled t-values must lie in [0, 1)")
    lim = None if limit is None else _as_scalar(limit)
    return SymbolSpec(kind="sampled", points=pts, limit=lim)


_poly_eval = compensated_poly_eval


def eval_at_t(a: SymbolSpec, t):
    """Value of the symbol at radius r = sqrt(t); t scalar or array."""
    if a.kind == "const":
        return a.value * (t * 0 + 1.0) if not np.isscalar(t) else a.value
    if a.kind == "indicator":
        cut = a.s * a.s
        if np.isscalar(t):
            return 1.0 if t < cut else 0.0
        return np.where(np.asarray(t) < cut, 1.0, 0.0)
    if a.kind in ("poly_t", "jacobi_g"):
        return _poly_eval(a.coeffs, t)
    if a.kind == "sampled":
        ts = np.array([p[0] for p in a.points])
        vs = np.array([p[1] for p in a.points])
        out = np.interp(np.asarray(t, dtype=float), ts, vs)
        return float(out) if np.isscalar(t) else out
    raise ValueError(f"unknown symbol kind {a.kind!r}")


def boundary_limit(a: SymbolSpec):
    """Boundary value at r -> 1, or None when unknown (sampled data)."""
    return a.limit


def sup_abs(a: SymbolSpec) -> float:
    """Supremum of |a| over [0, 1).

    Exact for const/indicator; for polynomials the critical points of the
    derivative are solved so the maximum is not a grid estimate.
    """
    if a.kind == "const":
        return abs(a.value)
    if a.kind == "indicator":
        return 1.0
    if a.kind in ("poly_t", "jacobi_g"):
        cs = np.array([complex(c) for c in a.coeffs])
        candidates = [0.0, 1.0]
        deriv = cs[1:] * np.arange(1, len(cs))
        if len(deriv) >= 2:
            for r in np.atleast_1d(np.roots(deriv[::-1])):
                if abs(r.imag) < 1e-12 and 0.0 < r.real < 1.0:
                    candidates.append(float(r.real))
        return max(abs(_poly_eval(a.coeffs, t)) for t in candidates)
    if a.kind == "sampled":
        return max(abs(v) for _, v in a.points)
    raise ValueError(f"unknown symbol kind {a.kind!r}")


def _scalar_to_json(v):
    if v is None:
        return None
    v = complex(v)
    return v.real if v.imag == 0.0 else [v.real, v.imag]


def _scalar_from_json(obj):
    if obj is None:
        return None
    if isinstance(obj, (list, tuple)):
        return complex(obj[0], obj[1])
    return float(obj)


def symbol_to_json_obj(a: SymbolSpec) -> dict:
    if a.kind == "const":
        return {"kind": "const", "value": _scalar_to_json(a.value)}
    if a.kind == "indicator":
        return {"kind": "indicator", "s": a.s}
    if a.kind == "poly_t":
        return {"kind": "poly_t", "coeffs": [_scalar_to_json(c) for c in a.coeffs]}
    if a.kind == "jacobi_g":
        return {"kind": "jacobi_g", "p": a.p, "alpha": a.alpha}
    if a.kind == "sampled":
        return {
            "kind": "sampled",
            "points": [[t, _scalar_to_json(v)] for t, v in a.points],
            "limit": _scalar_to_json(a.limit),
        }
    raise ValueError(f"unknown symbol kind {a.kind!r}")


def symbol_from_json_obj(obj: dict, alpha: Optional[float] = None) -> SymbolSpec:
    """Decode a symbol.  A jacobi_g entry may omit its weight exponent, in
    which case the contextual alpha (e.g. from the run configuration) is
    used."""
    try:
        kind = obj["kind"]
    except (TypeError, KeyError):
        raise ValueError("symbol JSON must be an object with a 'kind' field")
    if kind == "const":
        return const_symbol(_scalar_from_json(obj["value"]))
    if kind == "indicator":
        return indicator_symbol(float(obj["s"]))
    if kind == "poly_t":
        return poly_t_symbol([_scalar_from_json(c) for c in obj["coeffs"]])
    if kind == "jacobi_g":
        a = obj.get("alpha", alpha)
        if a is None:
            raise ValueError("jacobi_g symbol requires an alpha (field or context)")
        return make_gp(int(obj["p"]), float(a))
    if kind == "sampled":
        return sampled_symbol(
            [(t, _scalar_from_json(v)) for t, v in obj["points"]],
            limit=_scalar_from_json(obj.get("limit")),
        )
    raise ValueError(f"unknown symbol kind {kind!r}")
