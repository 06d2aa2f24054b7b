"""Centralized tolerances and runtime knobs.

One knob per error class. Every module reads these instead of sprinkling
literals, so the meaning of a failed check is always traceable to a single
named budget.
"""

import os

# Max |H - H^dag| entry accepted when constructing a HermitianOp.
HERMITICITY_TOL = 1e-12

# External witness files are rejected (never repaired) past this deviation.
WITNESS_HERMITICITY_TOL = 1e-10

# Eigendecomposition reconstruction residual, scaled by dim * max entry.
EIGEN_RESIDUAL_TOL = 1e-10

# Residual allowed on g @ Q = Q for fixed-subspace bases, and on
# permutation/representation constraint checks.
CONSTRAINT_RESIDUAL_TOL = 1e-10

# Cross-method and reduced-vs-unreduced value comparisons.
VALUE_TOL = 1e-6

# Conic backend feasibility/duality targets.
SOLVER_FEAS_TOL = 1e-8

# Default sign threshold for the certification verdict: a clipped hierarchy
# value >= -CERT_TOL counts as "nonnegative at this level".
CERT_TOL = 1e-8

# Dense-path dimension caps. Everything here is dense storage.
UNREDUCED_DIM_CAP = 4100
SCHUR_DIM_CAP = 4096
PI_K_CAP = 5

WORKERS_ENV_VAR = "KBLOCKPOS_WORKERS"


def worker_count() -> int:
    """Worker pool size: the env var if set and positive, else available parallelism."""
    raw = os.environ.get(WORKERS_ENV_VAR, "")
    try:
        n = int(raw)
        if n >= 1:
            return n
    except ValueError:
        pass
    return os.cpu_count() or 1
