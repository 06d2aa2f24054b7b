"""Schur transform on (C^k)^(x n), auxiliary-unitary twirl, and block extraction.

The transform is built deterministically from the spectra of the
Jucys-Murphy elements X_m = sum_{i<m} P_(i,m):

1. The joint eigenspaces of X_2, ..., X_n carry integer content vectors, and
   each content vector reconstructs a unique standard Young tableau; the
   eigenspace attached to tableau T is the multiplicity fiber of the pair
   (shape(T), T) with dimension dim U_lambda.
2. Inside the fiber of the first tableau of each shape (the reference fiber),
   a basis is fixed by splitting into torus weight spaces, ordered by
   decreasing-lexicographic weight, with each vector's phase rotated so its
   largest-modulus entry (smallest index on ties) is real positive.
3. The reference basis is transported to every other tableau of the shape
   through adjacent transpositions: if T' = s_j T is standard and r is the
   axial distance of j, j+1 on T, then
   |T', q> = (P_(j,j+1) - 1/r) |T, q> / sqrt(1 - 1/r^2),
   which is exactly the Young orthogonal form convention, so the permutation
   action in the new basis reproduces `sym_rep`'s matrices on the same
   tableau order.

Rows are sorted by shape (ascending lexicographic), then tableau index, then
weight index, and hold the conjugated basis vectors, so `matrix @ v` maps a
computational vector to its Schur coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import config, young
from .dense_linalg import HermitianOp, as_matrix
from .sym_rep import natural_perm
from .young import Partition

_CONTENT_TOL = 1e-8


@dataclass(frozen=True)
class SchurTransform:
    """Unitary change of basis with (shape, tableau index, weight index) row labels."""

    k: int
    n: int
    matrix: np.ndarray
    row_labels: tuple[tuple[Partition, int, int], ...]

    def shape_slices(self) -> list[tuple[Partition, slice, int, int]]:
        """Contiguous row ranges: (shape, rows, tableau count, multiplicity)."""
        out = []
        start = 0
        while start < len(self.row_labels):
            lam = self.row_labels[start][0]
            f = young.syt_dim(lam)
            u = young.unitary_dim(lam, self.k)
            out.append((lam, slice(start, start + f * u), f, u))
            start += f * u
        return out


def _tableau_from_contents(contents: tuple[int, ...]) -> young.Tableau:
    """Rebuild the standard tableau whose entry m sits at content contents[m-1]."""
    rows: list[list[int]] = []
    for m, c in enumerate(contents, start=1):
        placed = False
        for i in range(len(rows) + 1):
            j = len(rows[i]) if i < len(rows) else 0
            fits_row = i == 0 or (i < len(rows) + 1 and j < len(rows[i - 1]))
            if j - i == c and fits_row:
                if i < len(rows):
                    rows[i].append(m)
                else:
                    rows.append([m])
                placed = True
                break
        if not placed:
            raise AssertionError(f"content vector {contents} has no addable box at step {m}")
    return young.Tableau(rows)


def _weight_of_index(idx: int, k: int, n: int) -> tuple[int, ...]:
    counts = [0] * k
    for _ in range(n):
        counts[idx % k] += 1
        idx //= k
    return tuple(counts)


def _phase_fix(v: np.ndarray) -> np.ndarray:
    mags = np.abs(v)
    top = float(mags.max())
    lead = int(np.nonzero(mags >= top - 1e-9)[0][0])
    phase = v[lead] / abs(v[lead])
    return v * np.conj(phase)


@lru_cache(maxsize=None)
def schur_transform(k: int, n: int) -> SchurTransform:
    """Construct the Schur transform on (C^k)^(x n)."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    dim = k**n
    if dim > config.SCHUR_DIM_CAP:
        raise ValueError(f"dimension {dim} exceeds the dense cap {config.SCHUR_DIM_CAP}")

    # Joint eigenspaces of the Jucys-Murphy elements, refined one element at
    # a time. Each surviving block carries its integer content vector.
    blocks: list[tuple[tuple[int, ...], np.ndarray]] = [((), np.eye(dim, dtype=np.complex128))]
    for m in range(2, n + 1):
        jm = np.zeros((dim, dim))
        for i in range(1, m):
            jm += natural_perm(k, n, i, m)
        refined = []
        for contents, basis in blocks:
            sub = basis.conj().T @ jm @ basis
            vals, vecs = np.linalg.eigh((sub + sub.conj().T) / 2)
            rounded = np.rint(vals)
            if np.max(np.abs(vals - rounded)) > _CONTENT_TOL:
                raise AssertionError("Jucys-Murphy spectrum is not integral")
            for c in sorted(set(int(x) for x in rounded)):
                sel = np.nonzero(rounded == c)[0]
                refined.append((contents + (c,), basis @ vecs[:, sel]))
        blocks = refined

    fibers: dict[young.Tableau, np.ndarray] = {}
    for contents, basis in blocks:
        tab = _tableau_from_contents((0,) + contents)
        fibers[tab] = basis

    weights = [_weight_of_index(i, k, n) for i in range(dim)]
    weight_order = sorted(set(weights), reverse=True)
    rows_by_weight = {w: np.nonzero([wt == w for wt in weights])[0] for w in weight_order}

    shapes = sorted({t.shape for t in fibers})
    row_vectors: list[np.ndarray] = []
    row_labels: list[tuple[Partition, int, int]] = []
    for lam in shapes:
        tabs = [t for t, _ in young.enumerate_syt(lam, k)]
        mult = young.unitary_dim(lam, k)
        assert fibers[tabs[0]].shape[1] == mult

        # Deterministic basis of the reference fiber, one weight at a time.
        ref = tabs[0]
        proj = fibers[ref] @ fibers[ref].conj().T
        ref_basis: list[np.ndarray] = []
        for w in weight_order:
            sel = rows_by_weight[w]
            sub = proj[np.ix_(sel, sel)]
            vals, vecs = np.linalg.eigh((sub + sub.conj().T) / 2)
            for col in range(sub.shape[0]):
                if vals[col] < 0.5:
                    continue
                if abs(vals[col] - 1.0) > 1e-8:
                    raise AssertionError("fiber projector is not idempotent on a weight space")
                v = np.zeros(dim, dtype=np.complex128)
                v[sel] = vecs[:, col]
                ref_basis.append(_phase_fix(v))
        assert len(ref_basis) == mult

        # Transport to the remaining tableaux along adjacent transpositions.
        vecs_by_tab: dict[young.Tableau, list[np.ndarray]] = {ref: ref_basis}
        pending = [ref]
        while pending:
            t = pending.pop(0)
            for j in range(1, n):
                other = t.swap(j)
                if other is None or other in vecs_by_tab:
                    continue
                r = t.content_of(j + 1) - t.content_of(j)
                swap = natural_perm(k, n, j, j + 1)
                scale = 1.0 / np.sqrt(1.0 - 1.0 / r**2)
                vecs_by_tab[other] = [
                    (swap @ v - v / r) * scale for v in vecs_by_tab[t]
                ]
                pending.append(other)
        assert len(vecs_by_tab) == len(tabs)

        for p_idx, t in enumerate(tabs):
            for q_idx, v in enumerate(vecs_by_tab[t]):
                row_vectors.append(np.conj(v))
                row_labels.append((lam, p_idx, q_idx))

    matrix = np.vstack(row_vectors)
    unitary_dev = float(np.max(np.abs(matrix @ matrix.conj().T - np.eye(dim))))
    if unitary_dev > 1e-10:
        raise AssertionError(f"Schur transform is not unitary: deviation {unitary_dev:.3e}")
    matrix.setflags(write=False)
    return SchurTransform(k=k, n=n, matrix=matrix, row_labels=tuple(row_labels))


def _to_schur(rho: np.ndarray, t: SchurTransform, m: int) -> np.ndarray:
    big = np.kron(t.matrix, np.eye(m))
    return big @ rho @ big.conj().T


def _from_schur(sigma: np.ndarray, t: SchurTransform, m: int) -> np.ndarray:
    big = np.kron(t.matrix, np.eye(m))
    return big.conj().T @ sigma @ big


def twirl(rho, k: int, n: int, m: int) -> HermitianOp:
    """Exact average of rho over U^(x n) (x) 1_m for Haar-random U(k).

    Projection onto the commutant: in the Schur basis, cross-shape blocks
    vanish and each shape block is replaced by (1/dim U_lambda) times the
    identity on the multiplicity index tensored with the partial trace over
    it. Idempotent and trace-preserving; never sampled numerically.
    """
    arr = as_matrix(rho)
    if arr.shape[0] != k**n * m:
        raise ValueError(f"dimension {arr.shape[0]} does not factor as {k}^{n} * {m}")
    t = schur_transform(k, n)
    sigma = _to_schur(arr, t, m)
    out = np.zeros_like(sigma)
    for _, rows, f, u in t.shape_slices():
        rows = slice(rows.start * m, rows.stop * m)
        block = sigma[rows, rows].reshape(f, u, m, f, u, m)
        averaged = np.einsum("pqaPqb->paPb", block) / u
        fresh = np.zeros_like(block)
        for q in range(u):
            fresh[:, q, :, :, q, :] = averaged
        out[rows, rows] = fresh.reshape(f * u * m, f * u * m)
    back = _from_schur(out, t, m)
    return HermitianOp((back + back.conj().T) / 2)


@dataclass(frozen=True)
class BlockDecomposition:
    """Per-shape weights and normalized blocks of a twirl-invariant operator.

    Blocks are ordered by ascending shape; rho is None when the weight
    vanishes. Each rho_lambda is (tableau (x) ambient)-ordered with dimension
    syt_dim(lambda) * m.
    """

    k: int
    n: int
    m: int
    entries: tuple[tuple[Partition, float, HermitianOp | None], ...]


def extract_blocks(twirled, k: int, n: int, m: int, tol: float = 1e-8) -> BlockDecomposition:
    """Split a twirl-invariant operator into (w_lambda, rho_lambda) pairs."""
    arr = as_matrix(twirled)
    residual = float(np.max(np.abs(twirl(arr, k, n, m).matrix - arr)))
    if residual > tol:
        raise ValueError(f"input is not twirl-invariant: residual {residual:.3e} > {tol:.1e}")
    t = schur_transform(k, n)
    sigma = _to_schur(arr, t, m)
    entries = []
    for lam, rows, f, u in t.shape_slices():
        rows = slice(rows.start * m, rows.stop * m)
        block = sigma[rows, rows].reshape(f, u, m, f, u, m)
        summed = np.einsum("pqaPqb->paPb", block).reshape(f * m, f * m)
        weight = float(np.real(np.trace(summed)))
        if abs(weight) < 1e-12:
            entries.append((lam, 0.0, None))
        else:
            entries.append((lam, weight, HermitianOp(summed / weight, tol=1e-10)))
    return BlockDecomposition(k=k, n=n, m=m, entries=tuple(entries))


def reassemble(decomp: BlockDecomposition) -> HermitianOp:
    """Inverse of extract_blocks on its image."""
    t = schur_transform(decomp.k, decomp.n)
    m = decomp.m
    dim = decomp.k**decomp.n * m
    sigma = np.zeros((dim, dim), dtype=np.complex128)
    by_shape = {lam: (w, rho) for lam, w, rho in decomp.entries}
    for lam, rows, f, u in t.shape_slices():
        rows = slice(rows.start * m, rows.stop * m)
        w, rho = by_shape[lam]
        if rho is None or w == 0.0:
            continue
        weighted = (w / u) * rho.matrix.reshape(f, m, f, m)
        block = np.zeros((f, u, m, f, u, m), dtype=np.complex128)
        for q in range(u):
            block[:, q, :, :, q, :] = weighted
        sigma[rows, rows] = block.reshape(f * u * m, f * u * m)
    back = _from_schur(sigma, t, m)
    return HermitianOp((back + back.conj().T) / 2)
