"""Command-line surface: compute sequences, evaluate and separate pure
states, demo the matrix-unit reconstruction, cross-check against the 2D
disk oracle, and run the invariant suite.

Exit codes: 0 success, 1 failed verification, 2 bad input, 3 states not
separable.  The POLYBERG_THREADS environment variable caps the number of
workers used for per-frequency computation; output ordering is by
ascending frequency regardless of how the work was scheduled.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import verify as verify_mod
from .bergman_oracle import toeplitz_entry_2d
from .gammaseq import (
    MatrixSeq,
    block_csv,
    block_order,
    frequencies,
    gamma_matrix,
    seq_to_json_obj,
    spectral_norm,
    tail_deviation,
)
from .generators import generator_block, matrix_unit, nu_table, same_frequency_plan
from .integration import beta_entry
from .purestates import (
    NotSeparableError,
    PureState,
    eval_state,
    finite_state,
    limit_state,
    separate,
)
from .symbols import boundary_limit, symbol_from_json_obj, symbol_to_json_obj

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_NOT_SEPARABLE = 3


@dataclass
class RunConfig:
    n: int = 2
    alpha: float = 0.0
    xi_max: int = 8
    seed: int = 0
    tol_zero: float = 1e-10
    tol_nonzero: float = 1e-8


def _worker_cap() -> int:
    raw = os.environ.get("POLYBERG_THREADS", "")
    try:
        cap = int(raw)
    except ValueError:
        return 1
    return max(cap, 1)


def _load_symbol(spec: str, alpha: float):
    if spec.startswith("@"):
        with open(spec[1:], "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = spec
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"symbol is not valid JSON: {exc}") from exc
    return symbol_from_json_obj(obj, alpha=alpha)


def _parse_state(spec: str, n: int) -> PureState:
    if spec.strip().lower() == "inf":
        return limit_state()
    try:
        head, _, tail = spec.partition(":")
        xi = int(head)
        vec = np.array([complex(c) for c in tail.split(",")])
    except ValueError as exc:
        raise ValueError(
            f"state must be 'inf' or '<xi>:<c1,c2,...>', got {spec!r}"
        ) from exc
    d = block_order(n, xi)
    if vec.shape != (d,):
        raise ValueError(
            f"state at frequency {xi} needs a vector of dimension {d}, "
            f"got {vec.shape[0]}"
        )
    nrm = np.linalg.norm(vec)
    if nrm == 0:
        raise ValueError("state vector must be nonzero")
    return finite_state(xi, vec / nrm)


def _parallel_sequence(a, n: int, alpha: float, xi_max: int) -> MatrixSeq:
    freqs = list(frequencies(n, xi_max))
    cap = _worker_cap()
    if cap > 1:
        with ThreadPoolExecutor(max_workers=min(cap, len(freqs))) as pool:
            mats = list(pool.map(lambda xi: gamma_matrix(a, n, alpha, xi), freqs))
    else:
        mats = [gamma_matrix(a, n, alpha, xi) for xi in freqs]
    return MatrixSeq(
        n=n,
        alpha=alpha,
        blocks=dict(zip(freqs, mats)),
        scalar_limit=boundary_limit(a),
        symbol=a,
    )


def _write_output(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text)


def cmd_gamma(args) -> int:
    a = _load_symbol(args.symbol, args.alpha)
    seq = _parallel_sequence(a, args.n, args.alpha, args.xi_max)
    if args.format == "json":
        payload = json.dumps(seq_to_json_obj(seq), indent=2)
    else:
        payload = block_csv(seq, args.xi)
    _write_output(payload, args.out)
    sink = sys.stdout if args.out else sys.stderr
    print("xi order norm" + (" tail_deviation" if seq.scalar_limit is not None else ""),
          file=sink)
    for xi in sorted(seq.blocks):
        row = f"{xi:3d} {seq.blocks[xi].shape[0]:5d} {spectral_norm(seq.blocks[xi]):.6e}"
        if seq.scalar_limit is not None and xi >= 0:
            row += f" {tail_deviation(seq, xi):.6e}"
        print(row, file=sink)
    return EXIT_OK


def cmd_purestate(args) -> int:
    a = _load_symbol(args.symbol, args.alpha)
    state = _parse_state(args.state[0], args.n)
    xi_top = args.xi_max if state.is_limit else max(args.xi_max, state.xi, 0)
    seq = _parallel_sequence(a, args.n, args.alpha, xi_top)
    val = eval_state(state, seq)
    print(f"state value: {val}")
    return EXIT_OK


def cmd_separate(args) -> int:
    if len(args.state) != 2:
        print("separate needs exactly two --state arguments", file=sys.stderr)
        return EXIT_USAGE
    s1 = _parse_state(args.state[0], args.n)
    s2 = _parse_state(args.state[1], args.n)
    witness_symbol = (
        _load_symbol(args.symbol, args.alpha) if args.symbol else None
    )
    try:
        witness, vals = separate(
            s1, s2, args.n, args.alpha, infinity_witness=witness_symbol
        )
    except NotSeparableError as exc:
        print(f"not separable by construction: {exc}", file=sys.stderr)
        return EXIT_NOT_SEPARABLE
    if witness.symbol is not None:
        print("witness symbol: " + json.dumps(symbol_to_json_obj(witness.symbol)))
    else:
        print("witness plan: " + json.dumps(_describe_plan(args, s1, s2)))
    print(f"sigma_1 = {vals[0]}")
    print(f"sigma_2 = {vals[1]}")
    gap = abs(vals[0] - vals[1])
    print(f"gap = {gap}")
    return EXIT_OK if gap > 1e-8 else EXIT_NOT_SEPARABLE


def _describe_plan(args, s1: PureState, s2: PureState):
    from .generators import cross_frequency_plan
    from .purestates import witness_indices

    if s1.xi == s2.xi:
        p, q = witness_indices(s1.u, s2.u)
        return same_frequency_plan(args.n, args.alpha, s1.xi, p, q).to_json_obj()
    lo, hi = (s1, s2) if s1.xi < s2.xi else (s2, s1)
    p = int(np.argmax(np.abs(hi.u)))
    return cross_frequency_plan(args.n, args.alpha, lo.xi, hi.xi, p).to_json_obj()


def cmd_basis(args) -> int:
    d = block_order(args.n, args.xi)
    symbol_indices = [d - 1 + abs(args.xi) + j for j in range(d)]
    gs = [generator_block(args.n, args.alpha, args.xi, s) for s in symbol_indices]
    table = nu_table(gs, tol_zero=args.tol_zero, tol_nonzero=args.tol_nonzero)
    worst = 0.0
    for p in range(d):
        for q in range(d):
            e = np.zeros((d, d))
            e[p, q] = 1.0
            err = float(np.max(np.abs(matrix_unit(gs, table, p, q) - e)))
            worst = max(worst, err)
            print(f"unit ({p},{q}): max entry error {err:.3e}")
    print(f"worst reconstruction error: {worst:.3e}")
    return EXIT_OK if worst < 1e-8 else EXIT_FAIL


def cmd_oracle(args) -> int:
    a = _load_symbol(args.symbol, args.alpha)
    n = args.n
    worst = 0.0
    for xi in range(max(-n + 1, -args.xi_max), args.xi_max + 1):
        d = block_order(n, xi)
        for j in range(d):
            for k in range(j, d):
                direct = beta_entry(a, args.alpha, xi, j, k)
                two_d = toeplitz_entry_2d(
                    a,
                    args.alpha,
                    max(j + xi, j),
                    max(j - xi, j),
                    max(k + xi, k),
                    max(k - xi, k),
                )
                err = abs(two_d - direct)
                worst = max(worst, err)
        print(f"xi = {xi}: cumulative max |2d - exact| = {worst:.3e}")
    print(f"worst disagreement: {worst:.3e}")
    return EXIT_OK if worst < 1e-6 else EXIT_FAIL


def cmd_verify(args) -> int:
    cfg = RunConfig(
        n=args.n,
        alpha=args.alpha,
        xi_max=args.xi_max,
        seed=args.seed,
        tol_zero=args.tol_zero,
        tol_nonzero=args.tol_nonzero,
    )
    results = verify_mod.run_all(cfg)
    width = max(len(r.name) for r in results)
    failed = 0
    for r in results:
        tag = {"pass": "PASS", "fail": "FAIL", "skip": "SKIP"}[r.status]
        print(f"{tag}  {r.name:<{width}}  {r.detail}")
        failed += r.status == "fail"
    print(f"{len(results) - failed}/{len(results)} checks passed"
          + (f", {failed} failed" if failed else ""))
    return EXIT_OK if failed == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyberg",
        description="Frequency-indexed matrix model of radial Toeplitz operators",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, symbol=False):
        p.add_argument("--n", type=int, default=2)
        p.add_argument("--alpha", type=float, default=0.0)
        p.add_argument("--xi-max", dest="xi_max", type=int, default=8)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--tol-zero", dest="tol_zero", type=float, default=1e-10)
        p.add_argument("--tol-nonzero", dest="tol_nonzero", type=float, default=1e-8)
        if symbol:
            p.add_argument(
                "--symbol", required=True, help="symbol JSON or @file path"
            )

    p_gamma = sub.add_parser("gamma", help="compute and export a matrix sequence")
    common(p_gamma, symbol=True)
    p_gamma.add_argument("--format", choices=("json", "csv"), default="json")
    p_gamma.add_argument("--xi", type=int, default=0, help="frequency for CSV export")
    p_gamma.add_argument("--out", default=None)
    p_gamma.set_defaults(fn=cmd_gamma)

    p_state = sub.add_parser("purestate", help="evaluate a pure state on a sequence")
    common(p_state, symbol=True)
    p_state.add_argument("--state", action="append", required=True)
    p_state.set_defaults(fn=cmd_purestate)

    p_sep = sub.add_parser("separate", help="separate two pure states")
    common(p_sep)
    p_sep.add_argument("--symbol", default=None, help="witness symbol for limit-state pairs")
    p_sep.add_argument("--state", action="append", required=True)
    p_sep.set_defaults(fn=cmd_separate)

    p_basis = sub.add_parser("basis", help="matrix-unit reconstruction demo")
    common(p_basis)
    p_basis.add_argument("--xi", type=int, default=0)
    p_basis.set_defaults(fn=cmd_basis)

    p_oracle = sub.add_parser("oracle", help="cross-check entries against 2D quadrature")
    common(p_oracle, symbol=True)
    p_oracle.set_defaults(fn=cmd_oracle)

    p_verify = sub.add_parser("verify", help="run the invariant suite")
    p_verify.add_argument("--n", type=int, default=3)
    p_verify.add_argument("--alpha", type=float, default=None)
    p_verify.add_argument("--xi-max", dest="xi_max", type=int, default=8)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--tol-zero", dest="tol_zero", type=float, default=1e-10)
    p_verify.add_argument("--tol-nonzero", dest="tol_nonzero", type=float, default=1e-8)
    p_verify.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
