"""Certification of k-block-positivity via symmetry-reduced extendibility hierarchies.

The package tests whether a bipartite Hermitian operator X on C^d (x) C^d has
nonnegative expectation on every state of Schmidt number at most k. The test
tensors X with a k-dimensional maximally entangled projector and relaxes the
resulting block-positivity problem to a hierarchy of eigenvalue/SDP problems
indexed by the number N of symmetric Bob extensions. Unitary symmetry on the
auxiliary factors reduces each level to small per-Young-diagram blocks whose
bases are labeled by standard tableaux.

Modules
-------
dense_linalg    dense complex matrix substrate (kron, eigh, fixed subspaces)
young           exact partition/tableau combinatorics and dimension formulas
sym_rep         Young's orthogonal representation and the block constraints
schur           Schur transform, auxiliary-unitary twirl, block extraction
shifted_schur   exact shifted Schur evaluation and block-size ratios
reduction       witnesses, extensions, per-diagram objectives and problems
solver          block solvers, hierarchy aggregation, unreduced oracle
cli             command line front end
"""

from .dense_linalg import HermitianOp, common_fixed_subspace, hermitian_eigs, kron
from .reduction import (
    BlockProblem,
    UnreducedProblem,
    WitnessSpec,
    build_block_problem,
    isotropic_witness,
    load_witness,
    size_report,
)
from .solver import SolveReport, solve_hierarchy, unreduced_oracle

__all__ = [
    "HermitianOp",
    "common_fixed_subspace",
    "hermitian_eigs",
    "kron",
    "BlockProblem",
    "UnreducedProblem",
    "WitnessSpec",
    "build_block_problem",
    "isotropic_witness",
    "load_witness",
    "size_report",
    "SolveReport",
    "solve_hierarchy",
    "unreduced_oracle",
]

__version__ = "0.1.0"
