"""Print how far the symmetry reduction shrinks the extension problem.

For each pair dimension d and level N, the unreduced feasibility problem
lives on (2d)^(N+1) dimensions. The reduction replaces it by one block per
two-row diagram, each of size d_lambda * d^(N+1), with d_lambda small.
"""

from kblockpos.reduction import size_report


def main() -> None:
    print(f"{'d':>3} {'N':>3} {'unreduced':>10}   blocks (shape: dim, multiplicity d_lambda)")
    for d in (2, 3, 4, 5):
        for n_level in (2, 3):
            rows = size_report(2, d, n_level)
            cells = ", ".join(
                f"{r.shape}: {r.block_dim} (d_lam={r.d_lambda})" for r in rows
            )
            print(f"{d:>3} {n_level:>3} {rows[0].unreduced_dim:>10}   {cells}")


if __name__ == "__main__":
    main()
