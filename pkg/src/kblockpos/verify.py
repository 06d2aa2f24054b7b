"""Self-check batteries behind the `verify` command.

Each battery returns a list of CheckResult rows; the CLI renders them as
PASS/FAIL lines. The reference matrices pinned here have known closed forms
small enough to state inline: the three representation generators on two-row
diagrams and the basis-change matrices for two and three tensor factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import schur, shifted_schur, young
from .dense_linalg import haar_unitary, random_hermitian
from .reduction import isotropic_witness
from .solver import solve_hierarchy, unreduced_oracle
from .sym_rep import natural_perm, young_orthogonal_generator

_SEED = 49081

_S2 = math.sqrt(2)
_S3 = math.sqrt(3)
_S6 = math.sqrt(6)

GENERATOR_FIXTURES: tuple[tuple[tuple[int, ...], int, list[list[float]]], ...] = (
    ((2, 1), 2, [[0.5, _S3 / 2], [_S3 / 2, -0.5]]),
    ((2, 2), 3, [[-1.0, 0.0], [0.0, 1.0]]),
    ((3, 1), 3, [[1, 0, 0], [0, 1 / 3, 2 * _S2 / 3], [0, 2 * _S2 / 3, -1 / 3]]),
)

TRANSFORM_FIXTURES: dict[tuple[int, int], list[list[float]]] = {
    (2, 2): [
        [0, 1 / _S2, -1 / _S2, 0],
        [1, 0, 0, 0],
        [0, 1 / _S2, 1 / _S2, 0],
        [0, 0, 0, 1],
    ],
    (2, 3): [
        [0, 0, 1 / _S2, 0, -1 / _S2, 0, 0, 0],
        [0, 0, 0, 1 / _S2, 0, -1 / _S2, 0, 0],
        [0, 2 / _S6, -1 / _S6, 0, -1 / _S6, 0, 0, 0],
        [0, 0, 0, 1 / _S6, 0, 1 / _S6, -2 / _S6, 0],
        [1, 0, 0, 0, 0, 0, 0, 0],
        [0, 1 / _S3, 1 / _S3, 0, 1 / _S3, 0, 0, 0],
        [0, 0, 0, 1 / _S3, 0, 1 / _S3, 1 / _S3, 0],
        [0, 0, 0, 0, 0, 0, 0, 1],
    ],
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _check(name: str, dev: float, tol: float) -> CheckResult:
    return CheckResult(name, dev <= tol, f"deviation {dev:.3e} (tol {tol:.0e})")


def _row_sign_dev(got: np.ndarray, want: np.ndarray) -> float:
    """Max row deviation allowing an independent sign flip per row."""
    dev = float(np.max(np.abs(np.imag(got))))
    for i in range(want.shape[0]):
        row = np.real(got[i])
        dev = max(dev, min(float(np.max(np.abs(row - want[i]))), float(np.max(np.abs(row + want[i])))))
    return dev


def _block_pattern_dev(k: int, n: int, conjugated: np.ndarray, per_shape) -> float:
    """Deviation of a conjugated operator from the expected block pattern.

    per_shape(lam, f, u) returns the expected (f*u)-dim block, or None to
    check only that cross-shape entries vanish.
    """
    t = schur.schur_transform(k, n)
    dev = 0.0
    for lam, rows, f, u in t.shape_slices():
        outside = np.ones(conjugated.shape[0], dtype=bool)
        outside[rows] = False
        if outside.any():
            dev = max(dev, float(np.max(np.abs(conjugated[rows, :][:, outside]))))
        expected = per_shape(lam, f, u)
        if expected is not None:
            dev = max(dev, float(np.max(np.abs(conjugated[rows, rows] - expected))))
    return dev


def verify_reference_matrices() -> list[CheckResult]:
    out = []
    for shape, j, fixture in GENERATOR_FIXTURES:
        got = young_orthogonal_generator(shape, j, 2)
        dev = float(np.max(np.abs(got - np.array(fixture))))
        out.append(_check(f"generator {shape} swap({j},{j + 1})", dev, 1e-12))
    for (k, n), fixture in sorted(TRANSFORM_FIXTURES.items()):
        got = schur.schur_transform(k, n).matrix
        out.append(
            _check(f"transform k={k} n={n} (per-row sign)", _row_sign_dev(got, np.array(fixture)), 1e-12)
        )

    rng = np.random.default_rng(_SEED)
    for k, n in ((2, 2), (2, 3)):
        t = schur.schur_transform(k, n)
        dev = 0.0
        for j in range(1, n):
            conj = t.matrix @ natural_perm(k, n, j, j + 1) @ t.matrix.conj().T
            rep = {lam: young_orthogonal_generator(lam, j, k) for lam, _, _, _ in t.shape_slices()}
            dev = max(
                dev,
                _block_pattern_dev(
                    k, n, conj, lambda lam, f, u: np.kron(rep[lam], np.eye(u))
                ),
            )
        out.append(_check(f"permutation block pattern k={k} n={n}", dev, 1e-9))
        dev = 0.0
        for _ in range(20):
            u_mat = haar_unitary(k, rng)
            big = u_mat
            for _ in range(n - 1):
                big = np.kron(big, u_mat)
            conj = t.matrix @ big @ t.matrix.conj().T

            def blockcheck(lam, f, u, conj=conj, t=t):
                rows = next(sl for l2, sl, _, _ in t.shape_slices() if l2 == lam)
                sub = conj[rows, rows].reshape(f, u, f, u)
                expected = np.kron(np.eye(f), sub[0, :, 0, :])
                return expected

            dev = max(dev, _block_pattern_dev(k, n, conj, blockcheck))
        out.append(_check(f"unitary block pattern k={k} n={n} (20 draws)", dev, 1e-9))
    return out


def verify_twirl() -> list[CheckResult]:
    rng = np.random.default_rng(_SEED + 1)
    out = []
    for k, n, m in ((2, 2, 1), (2, 2, 2), (3, 2, 1)):
        rho = random_hermitian(k**n * m, rng)
        tw = schur.twirl(rho, k, n, m)
        twice = schur.twirl(tw, k, n, m)
        out.append(
            _check(f"idempotence k={k} n={n} m={m}", float(np.max(np.abs(twice.matrix - tw.matrix))), 1e-9)
        )
        out.append(
            _check(
                f"trace preservation k={k} n={n} m={m}",
                abs(complex(np.trace(tw.matrix) - np.trace(rho))),
                1e-10,
            )
        )
        dev = 0.0
        for _ in range(20):
            u_mat = haar_unitary(k, rng)
            big = u_mat
            for _ in range(n - 1):
                big = np.kron(big, u_mat)
            big = np.kron(big, np.eye(m))
            dev = max(dev, float(np.max(np.abs(big @ tw.matrix - tw.matrix @ big))))
        out.append(_check(f"unitary commutation k={k} n={n} m={m}", dev, 1e-9))
        dec = schur.extract_blocks(tw, k, n, m)
        back = schur.reassemble(dec)
        out.append(
            _check(
                f"extract/reassemble round trip k={k} n={n} m={m}",
                float(np.max(np.abs(back.matrix - tw.matrix))),
                1e-9,
            )
        )
    return out


def verify_ratios() -> list[CheckResult]:
    out = []
    worst: tuple | None = None
    for n in range(1, 10):
        for k in range(1, n + 1):
            mus = [(1,) * k]
            if k >= 2:
                mus.append((2,) + (1,) * (k - 2))
            for lam in young.enumerate_partitions(n, exact_rows=k):
                for mu in mus:
                    got = shifted_schur.ratio_skew(lam, mu) * young.syt_dim(lam)
                    want = young.skew_syt_dim(lam, mu)
                    if got != want:
                        worst = (lam, mu, got, want)
    out.append(
        CheckResult(
            "skew ratio identity (all diagrams with at most 9 boxes)",
            worst is None,
            "exact" if worst is None else f"first mismatch {worst}",
        )
    )

    worst = None
    for k in (2, 3):
        for n in range(k, 10):
            for lam in young.enumerate_partitions(n, exact_rows=k):
                a = young.skew_syt_dim(lam, (1,) * k)
                s = young.skew_syt_dim(lam, young.s_class_inner(k))
                got = shifted_schur.ratio_a_over_s(lam, k)
                want = None if s == 0 else Fraction(a, s)
                if got != want:
                    worst = (lam, k, got, want)
    out.append(
        CheckResult(
            "closed-form class ratio vs enumeration (k=2,3)",
            worst is None,
            "exact" if worst is None else f"first mismatch {worst}",
        )
    )

    pinned = shifted_schur.ratio_a_over_s((3, 2, 1), 3)
    out.append(
        CheckResult("class ratio at (3,2,1)", pinned == Fraction(1, 3), f"value {pinned}")
    )

    rng = np.random.default_rng(_SEED + 2)
    ok = True
    detail = "all below bound, equality only at uniform"
    for k in (2, 3, 4):
        for _ in range(50):
            parts = [int(v) for v in rng.integers(1, 60, size=k)]
            total = sum(parts)
            ws = sorted((Fraction(p, total) for p in parts), reverse=True)
            res = shifted_schur.asymptotic_ratio(ws)
            uniform = len(set(ws)) == 1
            if res.value > res.bound or res.at_bound != uniform:
                ok = False
                detail = f"violation at k={k}, weights {ws}"
    out.append(CheckResult("asymptotic harmonic bound (random weights)", ok, detail))
    return out


def verify_equality() -> list[CheckResult]:
    out = []
    for k, d, n_level in ((2, 2, 1), (2, 2, 2), (2, 2, 3), (2, 3, 1), (2, 3, 2), (3, 2, 1), (3, 2, 2)):
        w = isotropic_witness(d, -0.8)
        rep = solve_hierarchy(w, k, n_level)
        orc = unreduced_oracle(w, k, n_level)
        dev = abs(rep.hierarchy_value - orc.clipped)
        out.append(_check(f"reduced vs unreduced k={k} d={d} N={n_level}", dev, 1e-6))
    return out


SUITES = {
    "appendix": verify_reference_matrices,
    "twirl": verify_twirl,
    "ratio": verify_ratios,
    "equality": verify_equality,
}


def run_suite(suite: str) -> list[CheckResult]:
    if suite == "all":
        results = []
        for name in ("appendix", "twirl", "ratio", "equality"):
            results.extend(SUITES[name]())
        return results
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)} or 'all'")
    return SUITES[suite]()
