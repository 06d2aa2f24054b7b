"""Shifted Schur polynomials and the tableau-class ratio they control.

Everything here is exact rational arithmetic. The combinatorial evaluation
sums over reverse semistandard tableaux (rows weakly decreasing left to
right, columns strictly decreasing top to bottom, entries in 1..number of
variables); the binding correctness check is the identity

    skew_syt_dim(lam/mu) / syt_dim(lam) = shifted_schur_eval(mu, lam) / n!^(falling)

which ties the convention to brute-force skew tableau counting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .young import Partition, validate_partition

Rational = Fraction | int


def falling_factorial(x: Rational, m: int) -> Fraction:
    """x(x-1)...(x-m+1), with the empty product for m = 0."""
    if m < 0:
        raise ValueError("falling factorial needs a nonnegative exponent")
    out = Fraction(1)
    for i in range(m):
        out *= Fraction(x) - i
    return out


def _reverse_ssyt(mu: Partition, nvars: int):
    """Yield fillings of mu with entries in 1..nvars, rows weakly decreasing,
    columns strictly decreasing."""
    cells = [(i, j) for i, row_len in enumerate(mu) for j in range(row_len)]
    filling: dict[tuple[int, int], int] = {}

    def extend(pos: int):
        if pos == len(cells):
            yield dict(filling)
            return
        i, j = cells[pos]
        hi = nvars
        if j > 0:
            hi = min(hi, filling[(i, j - 1)])
        if i > 0:
            hi = min(hi, filling[(i - 1, j)] - 1)
        for v in range(hi, 0, -1):
            filling[(i, j)] = v
            yield from extend(pos + 1)
        filling.pop((i, j), None)

    yield from extend(0)


def shifted_schur_eval(mu: Partition, x: list[Rational] | tuple[Rational, ...]) -> Fraction:
    """Evaluate s*_mu at the given variables, exactly.

    Each reverse semistandard tableau T contributes the product over boxes
    (i, j) of (x_{T(i,j)} - (j - i)).
    """
    validate_partition(mu)
    xs = [Fraction(v) for v in x]
    if len(xs) < len(mu):
        raise ValueError("need at least as many variables as rows of mu")
    total = Fraction(0)
    for filling in _reverse_ssyt(mu, len(xs)):
        term = Fraction(1)
        for (i, j), entry in filling.items():
            term *= xs[entry - 1] - (j - i)
        total += term
    return total


def ratio_skew(lam: Partition, mu: Partition) -> Fraction:
    """skew_syt_dim(lam/mu) / syt_dim(lam) as an exact rational.

    Computed through the shifted Schur side: s*_mu(lam) divided by the
    falling factorial |lam| choose-and-order |mu|. Vanishes exactly when mu
    is not contained in lam.
    """
    validate_partition(lam)
    validate_partition(mu)
    n, m = sum(lam), sum(mu)
    if n < m:
        raise ValueError("lam must have at least as many boxes as mu")
    if len(mu) > len(lam):
        return Fraction(0)
    return shifted_schur_eval(mu, lam) / falling_factorial(n, m)


def ratio_a_over_s(lam: Partition, k: int) -> Fraction | None:
    """Closed-form ratio of class-A to class-S tableau counts for lam.

    Returns None for lam = (1,..,1), where class S is empty and the ratio
    diverges. Requires lam to have exactly k rows, k >= 2.
    """
    validate_partition(lam)
    if k < 2:
        raise ValueError("tableau classes need k >= 2")
    if len(lam) != k:
        raise ValueError(f"lam must have exactly {k} rows, got {len(lam)}")
    n_level = sum(lam) - k + 1

    def tail(j: int) -> Fraction:
        out = Fraction(1)
        for i in range(1, j):
            out *= 1 - Fraction(1, lam[i - 1] + k - i)
        return out

    denom = Fraction(n_level - lam[k - 1], lam[k - 1]) * tail(k)
    for j in range(1, k):
        denom += Fraction(n_level - 1, lam[j - 1] + k - j) * tail(j)
    if denom == 0:
        return None
    return 1 / denom


@dataclass(frozen=True)
class AsymptoticRatio:
    value: Fraction
    bound: Fraction
    at_bound: bool


def asymptotic_ratio(omega) -> AsymptoticRatio:
    """Limiting A/S ratio 1/(sum 1/w_j - 1) for row-fraction weights omega.

    The weights must be positive rationals in (0, 1], weakly decreasing and
    summing to 1. The value never exceeds 1/(k^2 - 1), with equality exactly
    at uniform weights; both the value and the bound are returned.
    """
    ws = [Fraction(w) for w in omega]
    k = len(ws)
    if k < 2:
        raise ValueError("need at least two weights")
    if any(w <= 0 for w in ws):
        raise ValueError("weights must be positive")
    if any(w > 1 for w in ws):
        raise ValueError("weights must lie in (0, 1]")
    if sum(ws) != 1:
        raise ValueError("weights must sum to 1 exactly")
    if any(ws[i] < ws[i + 1] for i in range(k - 1)):
        raise ValueError("weights must be weakly decreasing")
    value = 1 / (sum(1 / w for w in ws) - 1)
    bound = Fraction(1, k * k - 1)
    return AsymptoticRatio(value=value, bound=bound, at_bound=value == bound)
