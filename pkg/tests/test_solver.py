"""Block optimization routes and the level aggregation logic."""

import math

import numpy as np
import pytest

from kblockpos import solver
from kblockpos.reduction import build_block_problem, isotropic_witness
from kblockpos.solver import (
    SolverConfig,
    solve_block_eig,
    solve_block_sdp,
    solve_hierarchy,
    unreduced_oracle,
)


def test_solver_config_defaults():
    cfg = SolverConfig()
    assert cfg.feasibility_tol == 1e-8
    assert cfg.max_iters == 200000


def test_solve_block_eig_frozen_values():
    p = build_block_problem(isotropic_witness(3, -1.0), (1, 1), 2, 1)
    assert solve_block_eig(p).raw_value == pytest.approx(-2.0, abs=1e-9)
    p = build_block_problem(isotropic_witness(3, -1.0), (2, 1), 2, 2)
    assert solve_block_eig(p).raw_value == pytest.approx(-1.09307, abs=1e-4)


def test_solve_block_eig_reports_residuals():
    p = build_block_problem(isotropic_witness(2, -0.8), (2, 1), 2, 2)
    r = solve_block_eig(p)
    assert r.method == "eig"
    assert r.status == "optimal"
    assert r.residuals["constraint"] < 1e-10
    assert r.residuals["eigen"] < 1e-10


def test_solve_block_eig_nonnegative_witness():
    p = build_block_problem(isotropic_witness(2, 0.0), (2, 1), 2, 2)
    assert solve_block_eig(p).raw_value >= -1e-12


def test_eig_and_sdp_agree_on_blocks_up_to_256():
    cfg = SolverConfig()
    cases = [
        (2, 2, 2, (2, 1)),
        (2, 2, 3, (2, 2)),
        (2, 2, 3, (3, 1)),
        (2, 3, 2, (2, 1)),
        (2, 4, 2, (2, 1)),
        (2, 3, 3, (2, 2)),
        (2, 3, 3, (3, 1)),
    ]
    for alpha in (-1.0, -0.5, -0.3):
        for k, d, n_level, lam in cases:
            p = build_block_problem(isotropic_witness(d, alpha), lam, k, n_level)
            assert p.dim <= 256
            r_eig = solve_block_eig(p)
            r_sdp = solve_block_sdp(p, cfg)
            assert r_sdp.method == "sdp"
            assert abs(r_eig.raw_value - r_sdp.raw_value) < 1e-6, (d, n_level, lam, alpha)
            assert r_sdp.residuals["trace"] < 1e-6
            assert r_sdp.residuals["constraint"] < 1e-6
            assert r_sdp.residuals["psd_floor"] > -1e-7


def test_empty_fixed_subspace_is_infeasible(monkeypatch):
    p = build_block_problem(isotropic_witness(2, -0.8), (2, 1), 2, 2)
    monkeypatch.setattr(
        solver, "_fixed_subspace", lambda *args: np.zeros((p.dim, 0), dtype=complex)
    )
    r = solve_block_eig(p)
    assert r.status == "infeasible-block"
    assert r.infeasible
    assert math.isinf(r.raw_value)


def test_solve_hierarchy_reference_anchor_values():
    rep = solve_hierarchy(isotropic_witness(3, -1.0), 2, 2)
    assert rep.hierarchy_value == pytest.approx(-1.09307, abs=1e-4)
    assert not rep.clipped
    rep = solve_hierarchy(isotropic_witness(4, -0.75), 2, 2)
    assert rep.hierarchy_value == pytest.approx(-1.04601, abs=1e-4)
    rep = solve_hierarchy(isotropic_witness(3, -0.9), 2, 3)
    assert rep.hierarchy_value == pytest.approx(-0.7, abs=1e-4)


def test_solve_hierarchy_clipping_and_verdict():
    rep = solve_hierarchy(isotropic_witness(3, -0.3), 2, 1)
    assert rep.hierarchy_value == 0.0
    assert rep.clipped
    assert rep.verdict.startswith("certified nonnegative")
    assert rep.per_block[0].raw_value == pytest.approx(0.1, abs=1e-9)
    rep = solve_hierarchy(isotropic_witness(3, -0.8), 2, 2)
    assert not rep.clipped
    assert "inconclusive" in rep.verdict


def test_solve_hierarchy_report_metadata():
    x = isotropic_witness(2, -0.6)
    rep = solve_hierarchy(x, 2, 3)
    assert (rep.k, rep.d, rep.n_level) == (2, 2, 3)
    assert rep.alpha == -0.6
    assert rep.method == "eig"
    assert [r.shape for r in rep.per_block] == [(2, 2), (3, 1)]
    assert rep.wall_time > 0.0
    assert rep.hierarchy_value == min(0.0, min(r.raw_value for r in rep.per_block))


def test_solve_hierarchy_method_both():
    rep = solve_hierarchy(isotropic_witness(2, -0.8), 2, 2, method="both")
    assert len(rep.per_block) == 2
    by_method = {r.method: r for r in rep.per_block}
    assert abs(by_method["eig"].raw_value - by_method["sdp"].raw_value) < 1e-6
    with pytest.raises(ValueError):
        solve_hierarchy(isotropic_witness(2, -0.8), 2, 2, method="magic")


def test_solve_hierarchy_is_deterministic():
    a = solve_hierarchy(isotropic_witness(3, -0.7), 2, 3)
    b = solve_hierarchy(isotropic_witness(3, -0.7), 2, 3)
    assert a.hierarchy_value == b.hierarchy_value
    assert [r.raw_value for r in a.per_block] == [r.raw_value for r in b.per_block]


def test_trace_target_scales_raw_values():
    x = isotropic_witness(3, -0.8)
    base = solve_hierarchy(x, 2, 2)
    doubled = solve_hierarchy(x, 2, 2, trace_target=2.0)
    for r1, r2 in zip(base.per_block, doubled.per_block):
        assert r2.raw_value == pytest.approx(2.0 * r1.raw_value, abs=1e-9)
    assert ("certified" in base.verdict) == ("certified" in doubled.verdict)
    with pytest.raises(ValueError):
        solve_hierarchy(x, 2, 2, trace_target=-1.0)


def test_unreduced_oracle_matches_hierarchy():
    for k, d, n_level in [(2, 2, 1), (2, 2, 2), (2, 3, 1), (3, 2, 1)]:
        x = isotropic_witness(d, -0.8)
        oracle = unreduced_oracle(x, k, n_level)
        rep = solve_hierarchy(x, k, n_level)
        assert abs(oracle.clipped - rep.hierarchy_value) < 1e-6, (k, d, n_level)


def test_unreduced_oracle_fields():
    x = isotropic_witness(2, -0.8)
    res = unreduced_oracle(x, 2, 2)
    assert res.dim == 64
    assert 0 < res.rank < res.dim
    assert res.clipped == min(0.0, res.raw)
    assert res.wall_time > 0.0


def test_unreduced_oracle_respects_cap():
    with pytest.raises(ValueError):
        unreduced_oracle(isotropic_witness(4, -0.5), 2, 4)
