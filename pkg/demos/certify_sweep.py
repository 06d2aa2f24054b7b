"""Certify one witness, then sweep a family across levels.

The isotropic family X = 1 + alpha * d * |phi><phi| is the standard test
bed: on Schmidt-rank-2 states its true minimum is min(0, 1 + 2*alpha), so
it stays nonnegative exactly down to alpha = -1/2. Each relaxation level
gives a lower bound on that minimum, tightening as N grows. The sweep
makes the tightening visible column by column.
"""

from kblockpos.reduction import isotropic_witness
from kblockpos.solver import solve_hierarchy


def main() -> None:
    d = 3
    x = isotropic_witness(d, -0.45)
    report = solve_hierarchy(x, 2, 2)
    print(f"witness {x.label}, level N=2:")
    for block in report.per_block:
        print(f"  block {block.shape}: raw minimum {block.raw_value:+.6f}")
    print(f"  hierarchy value {report.hierarchy_value:+.6f} -> {report.verdict}")
    print()

    alphas = [round(-1.0 + 0.1 * i, 10) for i in range(8)]
    print(f"sweep, d = {d}, columns are levels N = 1, 2, 3:")
    print(f"{'alpha':>7} {'N=1':>12} {'N=2':>12} {'N=3':>12}")
    for alpha in alphas:
        vals = [
            solve_hierarchy(isotropic_witness(d, alpha), 2, n).hierarchy_value
            for n in (1, 2, 3)
        ]
        print(f"{alpha:>7} " + " ".join(f"{v:>12.6f}" for v in vals))


if __name__ == "__main__":
    main()
