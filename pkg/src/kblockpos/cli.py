"""Command line front end.

Exit codes: 0 = success (for `solve`: certified nonnegative at the requested
level), 2 = negative relaxation lower bound or a failed verification battery,
1 = usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import config, verify
from .reduction import isotropic_witness, load_witness, size_report
from .schur import schur_transform
from .solver import SolverConfig, solve_hierarchy
from .sym_rep import delta_lambda


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; this tool reserves 2 for verdicts."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def _shape_str(shape) -> str:
    return "(" + ",".join(str(p) for p in shape) + ")"


def _parse_shape(text: str) -> tuple[int, ...]:
    stripped = text.replace("(", "").replace(")", "")
    try:
        return tuple(int(p) for p in stripped.split(",") if p.strip())
    except ValueError:
        raise ValueError(f"cannot parse shape {text!r}; expected a form like 3,1")


def _parse_levels(text: str) -> list[int]:
    try:
        levels = sorted({int(p) for p in text.split(",") if p.strip()})
    except ValueError:
        raise ValueError(f"cannot parse levels {text!r}; expected a form like 1,2,3")
    if not levels or any(n < 1 for n in levels):
        raise ValueError("levels must be positive integers")
    return levels


def _alpha_grid(start: float, end: float, step: float) -> list[float]:
    if step <= 0:
        raise ValueError("alpha-step must be positive")
    if end < start:
        raise ValueError("alpha-start must not exceed alpha-end")
    count = int(round((end - start) / step)) + 1
    return [round(start + i * step, 10) for i in range(count)]


def _witness(args, parser: _Parser):
    given_file = getattr(args, "witness_file", None)
    given_alpha = getattr(args, "isotropic_alpha", None)
    if given_file and given_alpha is not None:
        parser.error("choose either --witness-file or --isotropic-alpha, not both")
    if given_file:
        return load_witness(given_file)
    if given_alpha is not None:
        if args.d is None:
            parser.error("--isotropic-alpha requires --d")
        return isotropic_witness(args.d, given_alpha)
    parser.error("a witness is required: --witness-file or --isotropic-alpha with --d")


def _report_row(rep) -> dict:
    blocks = "|".join(
        f"{_shape_str(r.shape)}={'inf' if r.infeasible else _fmt(r.raw_value)}"
        for r in rep.per_block
    )
    return {
        "k": rep.k,
        "d": rep.d,
        "N": rep.n_level,
        "alpha": "" if rep.alpha is None else _fmt(rep.alpha),
        "value": _fmt(rep.hierarchy_value),
        "clipped": str(rep.clipped).lower(),
        "blocks": blocks,
    }


def _report_dict(rep) -> dict:
    return {
        "k": rep.k,
        "d": rep.d,
        "N": rep.n_level,
        "alpha": rep.alpha,
        "method": rep.method,
        "trace_target": rep.trace_target,
        "hierarchy_value": rep.hierarchy_value,
        "clipped": rep.clipped,
        "verdict": rep.verdict,
        "wall_time": rep.wall_time,
        "blocks": [
            {
                "shape": list(r.shape),
                "method": r.method,
                "raw_value": None if r.infeasible else r.raw_value,
                "status": r.status,
                "residuals": r.residuals,
            }
            for r in rep.per_block
        ],
    }


_SWEEP_COLUMNS = ["k", "d", "N", "alpha", "value", "clipped", "blocks"]


def _emit_rows(rows: list[dict], fmt: str, out) -> None:
    if fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=_SWEEP_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    elif fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    else:
        widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in _SWEEP_COLUMNS}
        out.write("  ".join(c.ljust(widths[c]) for c in _SWEEP_COLUMNS).rstrip() + "\n")
        for r in rows:
            out.write("  ".join(str(r[c]).ljust(widths[c]) for c in _SWEEP_COLUMNS).rstrip() + "\n")


def _cmd_solve(args, parser: _Parser) -> int:
    w = _witness(args, parser)
    cfg = SolverConfig(feasibility_tol=args.solver_tol, duality_tol=args.solver_tol)
    rep = solve_hierarchy(
        w, args.k, args.N, method=args.method, trace_target=args.trace_target, cfg=cfg
    )
    if args.format == "json":
        print(json.dumps(_report_dict(rep), indent=2))
    elif args.format == "csv":
        _emit_rows([_report_row(rep)], "csv", sys.stdout)
    else:
        print(f"witness: {w.label}")
        print(
            f"k={rep.k} d={rep.d} N={rep.n_level} method={rep.method}"
            f" trace_target={_fmt(rep.trace_target)}"
        )
        for r in rep.per_block:
            val = "infeasible" if r.infeasible else _fmt(r.raw_value)
            print(f"  block {_shape_str(r.shape)} [{r.method}]: raw minimum {val}")
        print(f"hierarchy value: {_fmt(rep.hierarchy_value)}")
        print(f"verdict: {rep.verdict}")
        print(f"wall time: {rep.wall_time:.3f} s")
    return 0 if rep.hierarchy_value >= -args.tol else 2


def _cmd_sweep(args, parser: _Parser) -> int:
    levels = _parse_levels(args.levels)
    alphas = _alpha_grid(args.alpha_start, args.alpha_end, args.alpha_step)
    points = [(n, a) for n in levels for a in alphas]

    def run(point):
        n_level, alpha = point
        w = isotropic_witness(args.d, alpha)
        return solve_hierarchy(
            w, args.k, n_level, method=args.method, trace_target=args.trace_target
        )

    with ThreadPoolExecutor(max_workers=config.worker_count()) as pool:
        reports = list(pool.map(run, points))
    rows = [_report_row(rep) for rep in reports]
    if args.format == "json":
        rows = [_report_dict(rep) for rep in reports]
    if args.output:
        with open(args.output, "w", newline="") as fh:
            _emit_rows(rows, args.format, fh)
    else:
        _emit_rows(rows, args.format, sys.stdout)
    return 0


def _cmd_sizes(args, parser: _Parser) -> int:
    rows = size_report(args.k, args.d, args.N)
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "shape": list(r.shape),
                        "unreduced_dim": r.unreduced_dim,
                        "block_dim": r.block_dim,
                        "d_lambda": r.d_lambda,
                    }
                    for r in rows
                ],
                indent=2,
            )
        )
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["shape", "unreduced_dim", "block_dim", "d_lambda"])
        for r in rows:
            writer.writerow([_shape_str(r.shape), r.unreduced_dim, r.block_dim, r.d_lambda])
    else:
        parts = [str(rows[0].unreduced_dim)]
        parts += [str(r.block_dim) for r in rows]
        parts += [str(r.d_lambda) for r in rows]
        print(" | ".join(parts))
    return 0


def _matrix_text(mat: np.ndarray) -> str:
    if float(np.max(np.abs(np.imag(mat)))) < 1e-12:
        rows = [" ".join(f"{v:>12.6g}" for v in np.real(mat)[i]) for i in range(mat.shape[0])]
    else:
        rows = [" ".join(f"{v.real:.6g}{v.imag:+.6g}j" for v in mat[i]) for i in range(mat.shape[0])]
    return "\n".join(rows)


def _cmd_rep(args, parser: _Parser) -> int:
    shape = _parse_shape(args.shape)
    n_level = sum(shape) - args.k + 1
    mat = delta_lambda(shape, args.k, args.d, n_level, args.j)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "shape": list(shape),
                    "k": args.k,
                    "d": args.d,
                    "N": n_level,
                    "j": args.j,
                    "dim": mat.shape[0],
                    "matrix": [[float(v) for v in row] for row in mat],
                }
            )
        )
    else:
        print(f"shape {_shape_str(shape)}  k={args.k} d={args.d} N={n_level}  swap({args.j},{args.j + 1})")
        print(_matrix_text(mat.astype(np.complex128)))
    return 0


def _cmd_schur(args, parser: _Parser) -> int:
    t = schur_transform(args.k, args.n)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "k": t.k,
                    "n": t.n,
                    "row_labels": [
                        {"shape": list(lam), "p": p, "q": q} for lam, p, q in t.row_labels
                    ],
                    "matrix": [
                        [[v.real, v.imag] for v in row] for row in np.asarray(t.matrix)
                    ],
                }
            )
        )
    else:
        print(f"Schur transform k={t.k} n={t.n} dim={t.matrix.shape[0]}")
        for i, (lam, p, q) in enumerate(t.row_labels):
            print(f"  row {i}: shape {_shape_str(lam)} tableau {p} weight-index {q}")
        print(_matrix_text(t.matrix))
    return 0


def _cmd_verify(args, parser: _Parser) -> int:
    results = verify.run_suite(args.suite)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}")
    passed = sum(1 for r in results if r.passed)
    print(f"{passed}/{len(results)} checks passed")
    return 0 if passed == len(results) else 2


def build_parser() -> _Parser:
    parser = _Parser(
        prog="kblockpos",
        description="Certify k-block-positivity of bipartite Hermitian operators "
        "via symmetry-reduced extendibility hierarchies.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one hierarchy level for one witness")
    p_solve.add_argument("--k", type=int, required=True, help="Schmidt number to certify against")
    p_solve.add_argument("--N", type=int, required=True, help="extension level")
    p_solve.add_argument("--d", type=int, help="local dimension (isotropic witness)")
    p_solve.add_argument("--isotropic-alpha", type=float, help="isotropic parameter alpha")
    p_solve.add_argument("--witness-file", help="JSON witness file")
    p_solve.add_argument("--method", choices=("eig", "sdp", "both"), default="eig")
    p_solve.add_argument("--trace-target", type=float, default=1.0)
    p_solve.add_argument("--tol", type=float, default=config.CERT_TOL, help="certification tolerance")
    p_solve.add_argument("--solver-tol", type=float, default=config.SOLVER_FEAS_TOL)
    p_solve.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_solve.set_defaults(func=_cmd_solve)

    p_sweep = sub.add_parser("sweep", help="sweep isotropic alpha over one or more levels")
    p_sweep.add_argument("--k", type=int, required=True)
    p_sweep.add_argument("--d", type=int, required=True)
    p_sweep.add_argument("--levels", default="1,2,3", help="comma-separated extension levels")
    p_sweep.add_argument("--alpha-start", type=float, required=True)
    p_sweep.add_argument("--alpha-end", type=float, required=True)
    p_sweep.add_argument("--alpha-step", type=float, required=True)
    p_sweep.add_argument("--method", choices=("eig", "sdp", "both"), default="eig")
    p_sweep.add_argument("--trace-target", type=float, default=1.0)
    p_sweep.add_argument("--output", help="write to this path instead of stdout")
    p_sweep.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_sizes = sub.add_parser("sizes", help="reduced block sizes vs the unreduced dimension")
    p_sizes.add_argument("--k", type=int, required=True)
    p_sizes.add_argument("--d", type=int, required=True)
    p_sizes.add_argument("--N", type=int, required=True)
    p_sizes.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_sizes.set_defaults(func=_cmd_sizes)

    p_rep = sub.add_parser("rep", help="print one block constraint matrix")
    p_rep.add_argument("--shape", required=True, help="diagram, e.g. 3,1")
    p_rep.add_argument("--j", type=int, required=True, help="adjacent transposition (j, j+1)")
    p_rep.add_argument("--k", type=int, required=True)
    p_rep.add_argument("--d", type=int, default=1, help="ambient local dimension (default 1)")
    p_rep.add_argument("--format", choices=("text", "json"), default="text")
    p_rep.set_defaults(func=_cmd_rep)

    p_schur = sub.add_parser("schur", help="print the Schur transform for (k, n)")
    p_schur.add_argument("--k", type=int, required=True)
    p_schur.add_argument("--n", type=int, required=True)
    p_schur.add_argument("--format", choices=("text", "json"), default="text")
    p_schur.set_defaults(func=_cmd_schur)

    p_verify = sub.add_parser("verify", help="run a verification battery")
    p_verify.add_argument(
        "suite", choices=("appendix", "twirl", "ratio", "equality", "all"),
        help="appendix: pinned reference matrices; twirl: averaging properties; "
        "ratio: exact combinatorial identities; equality: reduced vs unreduced",
    )
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
