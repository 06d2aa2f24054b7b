"""Dense complex matrix substrate.

Thin, contract-enforcing layer over numpy: Kronecker products, Hermitian
eigendecomposition, common fixed subspaces of unitary generator sets, and the
random ensembles used by the verification suites. Everything is dense
complex128; target dimensions stay at a few thousand.
"""

from __future__ import annotations

import numpy as np

from . import config


class EigenSolveError(RuntimeError):
    """Raised when the eigensolver backend fails to converge."""


class HermitianOp:
    """Square complex matrix checked Hermitian at construction.

    The stored array is a defensive copy marked read-only, so instances are
    immutable and safely shareable across threads.
    """

    __slots__ = ("matrix",)

    def __init__(self, matrix, tol: float = config.HERMITICITY_TOL):
        arr = np.array(matrix, dtype=np.complex128)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {arr.shape}")
        if arr.size:
            deviation = float(np.max(np.abs(arr - arr.conj().T)))
            if deviation > tol:
                raise ValueError(
                    f"matrix is not Hermitian: max |H - H^dag| = {deviation:.3e} > {tol:.1e}"
                )
        arr.setflags(write=False)
        self.matrix = arr

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __repr__(self) -> str:
        return f"HermitianOp(dim={self.dim})"


def as_matrix(h) -> np.ndarray:
    """Unwrap a HermitianOp, passing plain arrays through."""
    if isinstance(h, HermitianOp):
        return h.matrix
    return np.asarray(h, dtype=np.complex128)


def kron(a, b) -> np.ndarray:
    """Kronecker product with the left factor major: (i(x)j, k(x)l) = a[i,k] b[j,l]."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.ndim != 2 or b.ndim != 2:
        raise ValueError("kron expects two matrices")
    return np.kron(a, b)


def hermitian_eigs(h) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns (eigenvalues ascending, eigenvector matrix V with eigenvectors as
    columns), satisfying h = V diag(w) V^dag up to the eigen residual budget.
    """
    mat = as_matrix(h)
    if mat.shape[0] != mat.shape[1]:
        raise ValueError("hermitian_eigs expects a square matrix")
    try:
        vals, vecs = np.linalg.eigh(mat)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - backend dependent
        raise EigenSolveError(f"eigh failed to converge at dim {mat.shape[0]}: {exc}") from exc
    return vals, vecs


def min_eigenvalue(h) -> float:
    """Smallest eigenvalue of a Hermitian matrix."""
    vals, _ = hermitian_eigs(h)
    return float(vals[0])


def _nullspace(a: np.ndarray) -> np.ndarray:
    """Orthonormal basis (columns) of ker(a) via SVD."""
    if a.shape[1] == 0:
        return np.zeros((0, 0), dtype=np.complex128)
    _, s, vh = np.linalg.svd(a)
    if s.size:
        cutoff = max(a.shape) * np.finfo(np.float64).eps * float(s[0])
        cutoff = max(cutoff, 1e-11)
    else:
        cutoff = 0.0
    rank = int(np.sum(s > cutoff))
    return vh[rank:].conj().T


def common_fixed_subspace(generators) -> np.ndarray:
    """Orthonormal basis (columns) of the joint fixed space of unitary generators.

    Computes an orthonormal basis Q of the intersection of ker(g - 1) over all
    generators g by accumulated nullspace intersection: starting from the full
    space, each step restricts the candidate basis to the kernel of (g - 1) on
    it. No group elements beyond the generators are ever enumerated. The
    result may have zero columns.
    """
    gens = [np.asarray(g, dtype=np.complex128) for g in generators]
    if not gens:
        raise ValueError("at least one generator is required (dimension is not inferable)")
    n = gens[0].shape[0]
    eye = np.eye(n, dtype=np.complex128)
    for g in gens:
        if g.ndim != 2 or g.shape != (n, n):
            raise ValueError(f"generator shape {g.shape} does not match dimension {n}")
        unitary_dev = float(np.max(np.abs(g.conj().T @ g - eye)))
        if unitary_dev > config.CONSTRAINT_RESIDUAL_TOL:
            raise ValueError(f"generator is not unitary: max |g^dag g - 1| = {unitary_dev:.3e}")
    q = eye
    for g in gens:
        if q.shape[1] == 0:
            break
        z = _nullspace(g @ q - q)
        q = q @ z
    return q


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary, QR of a Ginibre matrix with phase correction."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_hermitian(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Gaussian random Hermitian matrix."""
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return (a + a.conj().T) / 2.0
