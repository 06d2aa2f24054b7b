"""Witness constructions and assembly of reduced and unreduced problems.

Tensor factor layout is aux-block-major throughout: the full extension space
is ordered [A_aux, B_1_aux .. B_N_aux, A, B_1 .. B_N] with every auxiliary
(dimension-k) slot before every dimension-d slot. Each operator of interest
is then a single Kronecker product of an aux part and a d part.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import config, young
from .dense_linalg import HermitianOp
from .sym_rep import coxeter_range, delta_lambda
from .young import Partition, TableauClass


@dataclass(frozen=True)
class WitnessSpec:
    """A candidate witness X on C^d (x) C^d, plus how it was obtained."""

    d: int
    matrix: np.ndarray
    label: str
    alpha: float | None = None

    def __post_init__(self):
        arr = np.array(self.matrix, dtype=np.complex128)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("witness matrix must be square")
        if arr.shape[0] != self.d * self.d:
            raise ValueError(
                f"witness matrix has dimension {arr.shape[0]}, expected d^2 = {self.d * self.d}"
            )
        dev = float(np.max(np.abs(arr - arr.conj().T)))
        if dev > config.WITNESS_HERMITICITY_TOL:
            raise ValueError(f"witness matrix is not hermitian: deviation {dev:.3e}")
        arr.setflags(write=False)
        object.__setattr__(self, "matrix", arr)


def max_entangled(k: int) -> np.ndarray:
    """Unit vector sum_i |ii> / sqrt(k) on C^k (x) C^k."""
    if k < 1:
        raise ValueError("k must be positive")
    v = np.zeros(k * k, dtype=np.complex128)
    for i in range(k):
        v[i * k + i] = 1.0
    return v / math.sqrt(k)


def _perm_sign(sigma) -> int:
    inversions = sum(
        1 for a in range(len(sigma)) for b in range(a + 1, len(sigma)) if sigma[a] > sigma[b]
    )
    return -1 if inversions % 2 else 1


def build_pi_k(k: int) -> HermitianOp:
    """Rank-1 antisymmetrizing projector on (C^k)^(x k).

    Pi_k = |e><e| with |e> = (1/sqrt(k!)) sum_sigma sign(sigma) |sigma(1)...sigma(k)>.
    Unit trace; invariant under U^(x k) conjugation.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k > config.PI_K_CAP:
        raise ValueError(f"k = {k} exceeds the k^k construction cap (k <= {config.PI_K_CAP})")
    v = np.zeros(k**k, dtype=np.complex128)
    for sigma in itertools.permutations(range(k)):
        idx = 0
        for digit in sigma:
            idx = idx * k + digit
        v[idx] = _perm_sign(sigma)
    v /= math.sqrt(math.factorial(k))
    return HermitianOp(np.outer(v, v.conj()))


def isotropic_witness(d: int, alpha: float) -> WitnessSpec:
    """X = 1 + alpha * d * |phi_d><phi_d|, the isotropic family.

    Minimal eigenvalue min(1, 1 + alpha*d), so the witness leaves the
    positive cone exactly when alpha < -1/d.
    """
    if d < 2:
        raise ValueError("local dimension must be at least 2")
    phi = max_entangled(d)
    x = np.eye(d * d, dtype=np.complex128) + (alpha * d) * np.outer(phi, phi.conj())
    return WitnessSpec(d=d, matrix=x, label=f"isotropic(d={d}, alpha={alpha:g})", alpha=alpha)


def witness_from_matrix(matrix, d: int | None = None, label: str = "external") -> WitnessSpec:
    """Wrap an explicit matrix, refusing anything non-square or non-hermitian."""
    arr = np.array(matrix, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("witness matrix must be square")
    if d is None:
        d = math.isqrt(arr.shape[0])
    if d * d != arr.shape[0]:
        raise ValueError(f"dimension {arr.shape[0]} is not d^2 for d = {d}")
    return WitnessSpec(d=d, matrix=arr, label=label)


def load_witness(path: str) -> WitnessSpec:
    """Read a witness from JSON: {"d": int, "entries": [[[re, im], ...] ...]}.

    Entries are row-major over the product basis |i>_A (x) |j>_B with i major.
    Rejected unless the matrix is square of size d^2 and hermitian.
    """
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "d" not in data or "entries" not in data:
        raise ValueError("witness file must be a JSON object with keys 'd' and 'entries'")
    d = data["d"]
    if not isinstance(d, int) or d < 1:
        raise ValueError("'d' must be a positive integer")
    entries = data["entries"]
    try:
        arr = np.array(
            [[complex(cell[0], cell[1]) for cell in row] for row in entries],
            dtype=np.complex128,
        )
    except (TypeError, IndexError) as exc:
        raise ValueError("'entries' must be a matrix of [re, im] pairs") from exc
    if arr.ndim != 2:
        raise ValueError("'entries' must be a matrix of [re, im] pairs")
    return witness_from_matrix(arr, d=d, label=f"file:{path}")


@dataclass(frozen=True)
class UnreducedProblem:
    """Extension operator and symmetrizer on the full (kd)^(N+1) space."""

    k: int
    d: int
    n_level: int
    operator: HermitianOp
    symmetrizer: HermitianOp

    @property
    def dim(self) -> int:
        return (self.k * self.d) ** (self.n_level + 1)


def extend_witness(x: WitnessSpec, k: int, n_level: int) -> UnreducedProblem:
    """Build the extension operator and the Bob-permutation symmetrizer.

    The operator places |phi_k><phi_k| on (A_aux, B_1_aux) and X on (A, B_1),
    identity elsewhere. The symmetrizer averages the N! joint permutations of
    the Bob pairs (B_i_aux, B_i); Alice's slots are untouched.
    """
    if k < 1 or n_level < 1:
        raise ValueError("k and N must be positive")
    d = x.d
    dim = (k * d) ** (n_level + 1)
    if dim > config.UNREDUCED_DIM_CAP:
        raise ValueError(
            f"unreduced dimension (kd)^(N+1) = {dim} exceeds the cap {config.UNREDUCED_DIM_CAP}"
        )
    phi = max_entangled(k)
    aux_part = np.kron(np.outer(phi, phi.conj()), np.eye(k ** (n_level - 1)))
    d_part = np.kron(x.matrix, np.eye(d ** (n_level - 1)))
    operator = np.kron(aux_part, d_part)

    slot_dims = (k,) * (n_level + 1) + (d,) * (n_level + 1)
    digits = np.unravel_index(np.arange(dim), slot_dims)
    proj = np.zeros((dim, dim))
    weight = 1.0 / math.factorial(n_level)
    cols = np.arange(dim)
    for sigma in itertools.permutations(range(n_level)):
        permuted = (
            (digits[0],)
            + tuple(digits[1 + sigma[i]] for i in range(n_level))
            + (digits[n_level + 1],)
            + tuple(digits[n_level + 2 + sigma[i]] for i in range(n_level))
        )
        rows = np.ravel_multi_index(permuted, slot_dims)
        np.add.at(proj, (rows, cols), weight)
    return UnreducedProblem(
        k=k,
        d=d,
        n_level=n_level,
        operator=HermitianOp(operator),
        symmetrizer=HermitianOp(proj),
    )


def _check_shape(lam: Partition, k: int, n_level: int) -> None:
    young.validate_partition(lam)
    boxes = n_level + k - 1
    if sum(lam) != boxes:
        raise ValueError(f"shape {lam} has {sum(lam)} boxes, level {n_level} needs {boxes}")
    if len(lam) != k:
        raise ValueError(f"shape {lam} must have exactly {k} rows")


def block_objective(x: WitnessSpec, lam: Partition, k: int, n_level: int) -> HermitianOp:
    """kron(P_A, X (x) 1^(N-1)) on the tableau (x) ambient basis of a block.

    P_A is the diagonal projector onto class-A tableau labels; class-S
    rows and columns are exactly zero.
    """
    _check_shape(lam, k, n_level)
    d = x.d
    flags = [cls for _, cls in young.enumerate_syt(lam, k) if cls != TableauClass.M]
    diag = np.array([1.0 if cls == TableauClass.A else 0.0 for cls in flags])
    ambient = np.kron(x.matrix, np.eye(d ** (n_level - 1)))
    return HermitianOp(np.kron(np.diag(diag), ambient))


@dataclass(frozen=True)
class BlockProblem:
    """One per-diagram optimization: min tr(C rho) over invariant states.

    generators are the unitary involutions whose fixed states form the
    feasible set; constraint_bound records the naive scalar-constraint count
    (N-1) * d_lambda^2 * d^(N+1) that the fixed-subspace solver avoids.
    """

    shape: Partition
    k: int
    d: int
    n_level: int
    d_lambda: int
    objective: HermitianOp
    generators: tuple[np.ndarray, ...] = field(repr=False)
    trace_target: float = 1.0
    constraint_bound: int = 0

    @property
    def dim(self) -> int:
        return self.objective.dim


def build_block_problem(
    x: WitnessSpec, lam: Partition, k: int, n_level: int, trace_target: float = 1.0
) -> BlockProblem:
    """Assemble the block for diagram lam: objective plus Coxeter constraints."""
    _check_shape(lam, k, n_level)
    if trace_target <= 0:
        raise ValueError("trace target must be positive")
    d = x.d
    d_lam = young.block_size(lam, k)
    gens = tuple(delta_lambda(lam, k, d, n_level, j) for j in coxeter_range(k, n_level))
    return BlockProblem(
        shape=tuple(lam),
        k=k,
        d=d,
        n_level=n_level,
        d_lambda=d_lam,
        objective=block_objective(x, lam, k, n_level),
        generators=gens,
        trace_target=trace_target,
        constraint_bound=(n_level - 1) * d_lam**2 * d ** (n_level + 1),
    )


@dataclass(frozen=True)
class SizeRow:
    shape: Partition
    unreduced_dim: int
    block_dim: int
    d_lambda: int


def size_report(k: int, d: int, n_level: int) -> list[SizeRow]:
    """Reduced block sizes next to the unreduced dimension, one row per diagram."""
    if k < 1 or d < 1 or n_level < 1:
        raise ValueError("k, d, N must be positive")
    unreduced = (k * d) ** (n_level + 1)
    rows = []
    for lam in sorted(young.enumerate_partitions(n_level + k - 1, exact_rows=k)):
        d_lam = young.block_size(lam, k)
        rows.append(
            SizeRow(
                shape=lam,
                unreduced_dim=unreduced,
                block_dim=d_lam * d ** (n_level + 1),
                d_lambda=d_lam,
            )
        )
    return rows
