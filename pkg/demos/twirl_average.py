"""Exact unitary averaging versus brute-force Monte Carlo.

The twirl projects onto the commutant of U (x) U, computed here from the
explicit decomposition into symmetric and antisymmetric parts. A sampled
average over random unitaries should wander toward the same matrix at
the usual 1/sqrt(samples) rate.
"""

import numpy as np
from scipy.stats import unitary_group

from kblockpos.schur import twirl


def sampled_twirl(rho: np.ndarray, samples: int, seed: int) -> np.ndarray:
    u = unitary_group.rvs(2, size=samples, random_state=np.random.default_rng(seed))
    big = np.einsum("nij,nkl->nikjl", u, u).reshape(samples, 4, 4)
    return np.einsum("nab,bc,ndc->ad", big, rho, big.conj()) / samples


def main() -> None:
    rng = np.random.default_rng(7)
    psi = rng.normal(size=4) + 1j * rng.normal(size=4)
    psi /= np.linalg.norm(psi)
    rho = np.outer(psi, psi.conj())

    exact = twirl(rho, 2, 2, 1).matrix
    np.set_printoptions(precision=4, suppress=True)
    print("exact twirl of a random two-qubit pure state:")
    print(exact.real)

    for samples in (100, 1000, 10000, 100000):
        approx = sampled_twirl(rho, samples, seed=42)
        dev = float(np.max(np.abs(approx - exact)))
        print(f"monte carlo, {samples:>6} samples: max deviation {dev:.2e}")


if __name__ == "__main__":
    main()
