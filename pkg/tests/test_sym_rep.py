"""Structural checks of the orthogonal representation and block generators.

The braid, orthogonality, and involution identities hold exactly in the
representation theory; numerically they are required at 1e-12.
"""

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from kblockpos import young
from kblockpos.sym_rep import (
    coxeter_range,
    delta_lambda,
    delta_lambda_perm,
    natural_perm,
    perm_matrix,
    reduced_word,
    restricted_generator,
    symmetrizer,
    young_orthogonal_generator,
)


def shapes_upto(n_max, min_rows=1):
    for n in range(2, n_max + 1):
        for rows in range(min_rows, n + 1):
            yield from young.enumerate_partitions(n, rows)


def test_coxeter_range():
    assert list(coxeter_range(2, 3)) == [2, 3]
    assert list(coxeter_range(3, 2)) == [3]
    assert list(coxeter_range(2, 1)) == []


def test_generator_relations_up_to_six_boxes():
    for lam in shapes_upto(6):
        n = sum(lam)
        k = len(lam)
        gens = [young_orthogonal_generator(lam, j, k) for j in range(1, n)]
        size = gens[0].shape[0] if gens else 0
        eye = np.eye(size)
        for g in gens:
            assert np.max(np.abs(g - g.T)) < 1e-12
            assert np.max(np.abs(g @ g - eye)) < 1e-12
        for a in range(len(gens)):
            for b in range(a + 1, len(gens)):
                if b == a + 1:
                    lhs = gens[a] @ gens[b] @ gens[a]
                    rhs = gens[b] @ gens[a] @ gens[b]
                else:
                    lhs = gens[a] @ gens[b]
                    rhs = gens[b] @ gens[a]
                assert np.max(np.abs(lhs - rhs)) < 1e-12, (lam, a, b)


def test_generator_frozen_2_1():
    g = young_orthogonal_generator((2, 1), 2, 2)
    want = np.array([[0.5, oracles.ROOT3 / 2.0], [oracles.ROOT3 / 2.0, -0.5]])
    assert np.max(np.abs(g - want)) < 1e-12


def test_generator_index_bounds():
    with pytest.raises(ValueError):
        young_orthogonal_generator((2, 1), 3, 2)
    with pytest.raises(ValueError):
        young_orthogonal_generator((2, 1), 0, 2)


def test_restricted_generator_is_top_left_block():
    for lam, k in [((2, 2), 2), ((3, 1), 2), ((2, 2, 1), 3)]:
        n = sum(lam)
        for j in range(k, n):
            full = young_orthogonal_generator(lam, j, k)
            block = restricted_generator(lam, j, k)
            d_lam = young.block_size(lam, k)
            assert block.shape == (d_lam, d_lam)
            assert np.array_equal(block, full[:d_lam, :d_lam])


def test_no_mixed_coupling_up_to_nine_boxes():
    # Inside the Coxeter range the A+S sub-basis must be exactly invariant;
    # restricted_generator raises if any coupling to M appears.
    for lam in shapes_upto(9, min_rows=2):
        k = len(lam)
        n = sum(lam)
        for j in range(k, n):
            restricted_generator(lam, j, k)


def test_restricted_generator_rejects_outside_range():
    with pytest.raises(ValueError):
        restricted_generator((2, 2), 1, 2)


def test_perm_matrix_oracle():
    d, slots = 3, 3
    sigma = (1, 2, 0)
    p = perm_matrix(d, slots, sigma)
    rng = np.random.default_rng(2)
    vecs = [rng.normal(size=d) + 1j * rng.normal(size=d) for _ in range(slots)]
    inp = np.kron(np.kron(vecs[0], vecs[1]), vecs[2])
    moved = [None] * slots
    for src, dst in enumerate(sigma):
        moved[dst] = vecs[src]
    out = np.kron(np.kron(moved[0], moved[1]), moved[2])
    assert np.max(np.abs(p @ inp - out)) < 1e-12


def test_perm_matrix_composition():
    rng = np.random.default_rng(4)
    for _ in range(10):
        sigma = tuple(rng.permutation(4))
        tau = tuple(rng.permutation(4))
        comp = tuple(sigma[tau[i]] for i in range(4))
        lhs = perm_matrix(2, 4, sigma) @ perm_matrix(2, 4, tau)
        assert np.array_equal(lhs, perm_matrix(2, 4, comp))


def test_perm_matrix_rejects_non_permutation():
    with pytest.raises(ValueError):
        perm_matrix(2, 3, (0, 0, 1))


def test_natural_perm():
    p = natural_perm(2, 3, 1, 3)
    assert np.array_equal(p, perm_matrix(2, 3, (2, 1, 0)))
    assert np.array_equal(p @ p, np.eye(8))
    with pytest.raises(ValueError):
        natural_perm(2, 3, 3, 1)


def test_delta_lambda_structure():
    lam, k, d, n_level = (2, 2), 2, 2, 3
    for j in coxeter_range(k, n_level):
        g = delta_lambda(lam, k, d, n_level, j)
        want = np.kron(
            restricted_generator(lam, j, k),
            natural_perm(d, n_level + 1, j - k + 2, j - k + 3),
        )
        assert np.array_equal(g, want)
        assert np.max(np.abs(g @ g - np.eye(g.shape[0]))) < 1e-12


def test_delta_lambda_rejects_bad_inputs():
    with pytest.raises(ValueError):
        delta_lambda((2, 2), 2, 2, 3, 1)
    with pytest.raises(ValueError):
        delta_lambda((2, 2), 3, 2, 3, 3)
    with pytest.raises(ValueError):
        delta_lambda((2, 1), 2, 2, 3, 2)


@given(st.permutations(range(5)))
def test_reduced_word_reproduces_permutation(sigma):
    sigma = tuple(sigma)
    arrangement = list(range(5))
    for i in reduced_word(sigma):
        arrangement[i], arrangement[i + 1] = arrangement[i + 1], arrangement[i]
    assert tuple(arrangement) == sigma
    inversions = sum(
        1 for a in range(5) for b in range(a + 1, 5) if sigma[a] > sigma[b]
    )
    assert len(reduced_word(sigma)) == inversions


def test_delta_lambda_perm_is_representation():
    rng = np.random.default_rng(9)
    lam, k, d, n_level = (2, 2), 2, 2, 3
    for _ in range(5):
        sigma = tuple(rng.permutation(n_level))
        tau = tuple(rng.permutation(n_level))
        comp = tuple(sigma[tau[i]] for i in range(n_level))
        lhs = delta_lambda_perm(lam, k, d, n_level, sigma) @ delta_lambda_perm(
            lam, k, d, n_level, tau
        )
        rhs = delta_lambda_perm(lam, k, d, n_level, comp)
        assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_symmetrizer_frozen_small_case():
    s = symmetrizer((2, 1), 2, 1, 2)
    assert np.max(np.abs(s - oracles.SYMMETRIZER_2_1)) < 1e-12
    assert np.linalg.matrix_rank(s) == 1


def test_symmetrizer_is_projector():
    for lam, k, d, n_level in [((2, 1), 2, 2, 2), ((2, 2), 2, 2, 3), ((2, 1, 1), 3, 2, 2)]:
        s = symmetrizer(lam, k, d, n_level)
        assert np.max(np.abs(s - s.T)) < 1e-12
        assert np.max(np.abs(s @ s - s)) < 1e-12
        rank = int(round(float(np.trace(s))))
        assert np.linalg.matrix_rank(s, tol=1e-9) == rank
        for j in coxeter_range(k, n_level):
            g = delta_lambda(lam, k, d, n_level, j)
            assert np.max(np.abs(g @ s - s)) < 1e-12


def test_symmetrizer_trivial_at_level_one():
    s = symmetrizer((1, 1), 2, 2, 1)
    assert np.array_equal(s, np.eye(1 * 2**2))
