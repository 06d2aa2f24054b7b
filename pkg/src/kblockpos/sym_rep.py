"""Young's orthogonal representation and the induced block constraint operators.

Adjacent transpositions (j, j+1) act on the standard-tableau basis of
`young.enumerate_syt`: a tableau T with j, j+1 in the same row maps to itself
with +1, in the same column with -1, and otherwise carries diagonal entry 1/r
and couples to the swapped tableau with sqrt(1 - 1/r^2), where
r = content(j+1) - content(j) is the axial distance measured on T. Restricted
to the leading A+S sub-basis and tensored with a permutation of Bob's
d-dimensional factors, these matrices become the constraint generators of the
reduced blocks.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from . import young
from .young import Partition


def coxeter_range(k: int, n_level: int) -> range:
    """Generator labels j with k <= j <= N + k - 2 (empty at N = 1)."""
    return range(k, n_level + k - 1)


@lru_cache(maxsize=None)
def young_orthogonal_generator(shape: Partition, j: int, k: int) -> np.ndarray:
    """Orthogonal matrix of the adjacent transposition (j, j+1) on the SYT basis.

    The basis is `young.enumerate_syt(shape, k)`. The matrix is real,
    symmetric, and involutive.
    """
    shape = young.validate_partition(shape)
    n = sum(shape)
    if not 1 <= j <= n - 1:
        raise ValueError(f"generator index {j} out of range 1..{n - 1}")
    tabs = [t for t, _ in young.enumerate_syt(shape, k)]
    index = {t: i for i, t in enumerate(tabs)}
    size = len(tabs)
    m = np.zeros((size, size))
    for idx, t in enumerate(tabs):
        i1, j1 = t.position_of(j)
        i2, j2 = t.position_of(j + 1)
        if i1 == i2:
            m[idx, idx] = 1.0
        elif j1 == j2:
            m[idx, idx] = -1.0
        else:
            r = (j2 - i2) - (j1 - i1)
            m[idx, idx] = 1.0 / r
            other = t.swap(j)
            m[idx, index[other]] = math.sqrt(1.0 - 1.0 / r**2)
    m.setflags(write=False)
    return m


@lru_cache(maxsize=None)
def restricted_generator(shape: Partition, j: int, k: int) -> np.ndarray:
    """Top-left d_lambda x d_lambda (A+S) block of the generator matrix.

    Only defined for j in the Coxeter range k..n-1; there the M rows/columns
    must have exactly zero coupling to A+S, which is asserted rather than
    assumed.
    """
    shape = young.validate_partition(shape)
    n = sum(shape)
    if not k <= j <= n - 1:
        raise ValueError(f"generator index {j} outside the Coxeter range {k}..{n - 1}")
    full = young_orthogonal_generator(shape, j, k)
    d_lam = young.block_size(shape, k)
    coupling = float(np.max(np.abs(full[:d_lam, d_lam:]))) if d_lam < full.shape[0] else 0.0
    if coupling != 0.0:
        raise RuntimeError(
            f"A+S block of {shape} is not invariant under generator {j}: coupling {coupling:.3e}"
        )
    block = full[:d_lam, :d_lam].copy()
    block.setflags(write=False)
    return block


def perm_matrix(d: int, slots: int, sigma: tuple[int, ...]) -> np.ndarray:
    """Permutation matrix on (C^d)^(x slots) sending the factor at slot i to slot sigma[i].

    `sigma` is 0-based of length `slots`. Slot 0 is the most significant digit
    of the row-major index.
    """
    if sorted(sigma) != list(range(slots)):
        raise ValueError(f"not a permutation of 0..{slots - 1}: {sigma}")
    dim = d**slots
    idx = np.arange(dim)
    digits = np.stack(np.unravel_index(idx, (d,) * slots), axis=1)
    moved = np.empty_like(digits)
    for src, dst in enumerate(sigma):
        moved[:, dst] = digits[:, src]
    new_idx = np.ravel_multi_index(tuple(moved.T), (d,) * slots)
    p = np.zeros((dim, dim))
    p[new_idx, idx] = 1.0
    return p


def natural_perm(d: int, slots: int, a: int, b: int) -> np.ndarray:
    """Permutation matrix swapping tensor factors a and b (1-based slots)."""
    if not 1 <= a < b <= slots:
        raise ValueError(f"need 1 <= a < b <= slots, got a={a}, b={b}, slots={slots}")
    sigma = list(range(slots))
    sigma[a - 1], sigma[b - 1] = sigma[b - 1], sigma[a - 1]
    return perm_matrix(d, slots, tuple(sigma))


def _check_block_shape(shape: Partition, k: int, n_level: int) -> Partition:
    shape = young.validate_partition(shape)
    if len(shape) != k:
        raise ValueError(f"shape {shape} does not have exactly {k} rows")
    if sum(shape) != n_level + k - 1:
        raise ValueError(f"shape {shape} does not have {n_level + k - 1} boxes")
    return shape


@lru_cache(maxsize=None)
def delta_lambda(shape: Partition, k: int, d: int, n_level: int, j: int) -> np.ndarray:
    """Constraint generator Delta_lambda((j, j+1)) on C^d_lambda (x) (C^d)^(x N+1).

    The left factor is the restricted representation matrix; the right factor
    swaps Bob's d-slots j-k+2 and j-k+3 (slot 1 is Alice's and stays inert).
    """
    shape = _check_block_shape(shape, k, n_level)
    if j not in coxeter_range(k, n_level):
        raise ValueError(f"generator index {j} not in the Coxeter range of N={n_level}")
    left = restricted_generator(shape, j, k)
    right = natural_perm(d, n_level + 1, j - k + 2, j - k + 3)
    out = np.kron(left, right)
    out.setflags(write=False)
    return out


def reduced_word(sigma: tuple[int, ...]) -> list[int]:
    """Adjacent-swap word for a 0-based permutation, by bubble sort.

    Returns 0-based positions i meaning "swap slots i and i+1"; composing the
    swaps in list order over the identity arrangement produces `sigma`.
    """
    arrangement = list(sigma)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(arrangement) - 1):
            if arrangement[i] > arrangement[i + 1]:
                arrangement[i], arrangement[i + 1] = arrangement[i + 1], arrangement[i]
                word.append(i)
                changed = True
    word.reverse()
    return word


def delta_lambda_perm(shape: Partition, k: int, d: int, n_level: int, sigma: tuple[int, ...]) -> np.ndarray:
    """Delta_lambda(pi) for an arbitrary Bob permutation, via a reduced word.

    `sigma` permutes Bob's N systems (0-based). The representation property
    makes the result independent of the chosen word.
    """
    shape = _check_block_shape(shape, k, n_level)
    dim = young.block_size(shape, k) * d ** (n_level + 1)
    out = np.eye(dim)
    for i in reduced_word(sigma):
        out = out @ delta_lambda(shape, k, d, n_level, k + i)
    return out


@lru_cache(maxsize=None)
def symmetrizer(shape: Partition, k: int, d: int, n_level: int) -> np.ndarray:
    """Group average (1/N!) sum over Bob permutations of Delta_lambda(pi).

    A Hermitian idempotent projector onto the permutation-invariant subspace
    of the block.
    """
    shape = _check_block_shape(shape, k, n_level)
    dim = young.block_size(shape, k) * d ** (n_level + 1)
    acc = np.zeros((dim, dim))
    count = 0
    for sigma in itertools.permutations(range(n_level)):
        acc += delta_lambda_perm(shape, k, d, n_level, sigma)
        count += 1
    acc /= count
    acc.setflags(write=False)
    return acc
