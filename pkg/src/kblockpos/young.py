"""Exact combinatorics of partitions and standard Young tableaux.

Partitions are tuples of weakly decreasing positive integers. All arithmetic
here is exact (integers and fractions); floats never appear.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from functools import lru_cache

Partition = tuple[int, ...]


class TableauClass(Enum):
    A = "A"
    S = "S"
    M = "M"


_CLASS_RANK = {TableauClass.A: 0, TableauClass.S: 1, TableauClass.M: 2}


def validate_partition(parts) -> Partition:
    p = tuple(int(x) for x in parts)
    if any(x < 1 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {p}")
    return p


def contains(outer: Partition, inner: Partition) -> bool:
    """Row-wise containment inner_i <= outer_i."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def hook_length(shape: Partition, i: int, j: int) -> int:
    """Hook length of box (i, j), 0-based."""
    arm = shape[i] - j - 1
    leg = sum(1 for r in range(i + 1, len(shape)) if shape[r] > j)
    return arm + leg + 1


def enumerate_partitions(n: int, exact_rows: int) -> list[Partition]:
    """All partitions of n with exactly exact_rows parts, lexicographically descending."""
    if exact_rows < 1:
        raise ValueError("exact_rows must be >= 1")
    if n < exact_rows:
        return []

    def rec(remaining: int, rows: int, cap: int):
        if rows == 1:
            if 1 <= remaining <= cap:
                yield (remaining,)
            return
        # First part large enough that the rest can still fill `rows - 1` rows.
        lo = -(-remaining // rows)  # ceil
        for first in range(min(cap, remaining - rows + 1), lo - 1, -1):
            for rest in rec(remaining - first, rows - 1, first):
                yield (first,) + rest

    return list(rec(n, exact_rows, n))


@lru_cache(maxsize=None)
def syt_dim(shape: Partition) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    shape = validate_partition(shape)
    n = sum(shape)
    prod = 1
    for i in range(len(shape)):
        for j in range(shape[i]):
            prod *= hook_length(shape, i, j)
    count, rem = divmod(math.factorial(n), prod)
    assert rem == 0
    return count


@lru_cache(maxsize=None)
def unitary_dim(shape: Partition, k: int) -> int:
    """Dimension of the U(k) irrep for `shape`: prod (k + j - i) / hook, 0 if rows > k."""
    shape = validate_partition(shape)
    if len(shape) > k:
        return 0
    value = Fraction(1)
    for i in range(len(shape)):
        for j in range(shape[i]):
            value *= Fraction(k + j - i, hook_length(shape, i, j))
    assert value.denominator == 1
    return int(value)


class Tableau:
    """Standard Young tableau with 1-based entries, rows stored top to bottom."""

    __slots__ = ("rows", "_pos")

    def __init__(self, rows):
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        pos: dict[int, tuple[int, int]] = {}
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                pos[v] = (i, j)
        self._pos = pos
        n = sum(len(r) for r in self.rows)
        if sorted(pos) != list(range(1, n + 1)):
            raise ValueError(f"entries must be a bijection onto 1..{n}")
        for i, row in enumerate(self.rows):
            for j in range(len(row)):
                if j + 1 < len(row) and row[j] >= row[j + 1]:
                    raise ValueError("rows must increase left to right")
                if i + 1 < len(self.rows) and j < len(self.rows[i + 1]) and row[j] >= self.rows[i + 1][j]:
                    raise ValueError("columns must increase top to bottom")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def position_of(self, value: int) -> tuple[int, int]:
        """0-based (row, column) of an entry."""
        return self._pos[value]

    def content_of(self, value: int) -> int:
        """Content j - i of the box holding `value` (0-based, same as 1-based)."""
        i, j = self._pos[value]
        return j - i

    def swap(self, value: int):
        """Tableau with `value` and `value + 1` exchanged, or None if not standard."""
        i1, j1 = self._pos[value]
        i2, j2 = self._pos[value + 1]
        if i1 == i2 or j1 == j2:
            return None
        grid = [list(r) for r in self.rows]
        grid[i1][j1], grid[i2][j2] = value + 1, value
        return Tableau(grid)

    def column_word(self) -> tuple[int, ...]:
        """Columns left to right, each read top to bottom."""
        ncols = len(self.rows[0]) if self.rows else 0
        word = []
        for j in range(ncols):
            for row in self.rows:
                if j < len(row):
                    word.append(row[j])
        return tuple(word)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Tableau({list(list(r) for r in self.rows)})"


def standard_tableaux(shape: Partition) -> list[Tableau]:
    """All standard tableaux of `shape`, by forward filling."""
    shape = validate_partition(shape)
    n = sum(shape)
    grid = [[0] * shape[i] for i in range(len(shape))]
    filled = [0] * len(shape)  # boxes filled so far in each row
    out: list[Tableau] = []

    def place(value: int):
        if value > n:
            out.append(Tableau(grid))
            return
        for i in range(len(shape)):
            j = filled[i]
            if j >= shape[i]:
                continue
            if i > 0 and filled[i - 1] <= j:
                continue
            grid[i][j] = value
            filled[i] += 1
            place(value + 1)
            filled[i] -= 1
            grid[i][j] = 0

    place(1)
    return out


def classify(t: Tableau, k: int) -> TableauClass:
    """First-column classification relative to k.

    A: the first column starts 1, 2, ..., k. S: it starts 1, ..., k-1 and k
    sits at position (1, 2). M: everything else.
    """
    col1 = [row[0] for row in t.rows]
    if len(col1) >= k and all(col1[i] == i + 1 for i in range(k)):
        return TableauClass.A
    if (
        all(col1[i] == i + 1 for i in range(min(k - 1, len(col1))))
        and len(col1) >= k - 1
        and len(t.rows[0]) >= 2
        and t.rows[0][1] == k
    ):
        return TableauClass.S
    return TableauClass.M


@lru_cache(maxsize=None)
def enumerate_syt(shape: Partition, k: int) -> tuple[tuple[Tableau, TableauClass], ...]:
    """All standard tableaux of `shape`, class-major (A, S, M), column-lex within class.

    This total order is the basis order used everywhere downstream. The
    class-major grouping is imposed explicitly; it is not assumed to follow
    from the column-lexicographic comparison alone.
    """
    shape = validate_partition(shape)
    tagged = [(t, classify(t, k)) for t in standard_tableaux(shape)]
    tagged.sort(key=lambda tc: (_CLASS_RANK[tc[1]], tc[0].column_word()))
    return tuple(tagged)


def _exact_det(m: list[list[Fraction]]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    size = len(m)
    m = [row[:] for row in m]
    det = Fraction(1)
    for c in range(size):
        pivot = next((r for r in range(c, size) if m[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, size):
            factor = m[r][c] * inv
            if factor:
                m[r] = [m[r][j] - factor * m[c][j] for j in range(size)]
    return det


@lru_cache(maxsize=None)
def skew_syt_dim(outer: Partition, inner: Partition = ()) -> int:
    """Number of standard fillings of the skew shape outer/inner.

    Uses the determinant n! * det(1 / (outer_i - inner_j - i + j)!), with
    1/negative! read as 0. Returns 0 when inner is not contained in outer,
    and 1 for the empty skew shape.
    """
    outer = validate_partition(outer)
    inner = validate_partition(inner) if inner else ()
    if not contains(outer, inner):
        return 0
    rows = len(outer)
    padded = tuple(inner) + (0,) * (rows - len(inner))
    n = sum(outer) - sum(inner)
    m = []
    for i in range(rows):
        row = []
        for j in range(rows):
            a = outer[i] - padded[j] - i + j
            row.append(Fraction(1, math.factorial(a)) if a >= 0 else Fraction(0))
        m.append(row)
    value = math.factorial(n) * _exact_det(m)
    assert value.denominator == 1 and value >= 0
    return int(value)


def s_class_inner(k: int) -> Partition:
    """The inner shape whose skew count is |class S|: (2, 1^(k-2)); (2) at k=2."""
    if k < 2:
        raise ValueError("the S class exists only for k >= 2")
    return (2,) + (1,) * (k - 2)


def block_size(shape: Partition, k: int) -> int:
    """d_lambda = |class A| + |class S| for a shape with exactly k rows."""
    shape = validate_partition(shape)
    if len(shape) != k:
        raise ValueError(f"shape {shape} does not have exactly {k} rows")
    a_count = skew_syt_dim(shape, (1,) * k)
    s_count = skew_syt_dim(shape, s_class_inner(k)) if k >= 2 else 0
    return a_count + s_count
