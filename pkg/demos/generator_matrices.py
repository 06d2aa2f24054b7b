"""Show the small orthogonal matrices that drive the reduced problem.

Adjacent transpositions act on standard Young tableaux through sparse
orthogonal matrices. Only transpositions that fix the first k symbols
matter for the reduced blocks, and those leave the A+S tableau span
invariant, so a d_lambda x d_lambda corner is all the solver ever touches.
"""

import numpy as np

from kblockpos.schur import schur_transform
from kblockpos.sym_rep import restricted_generator, young_orthogonal_generator


def main() -> None:
    np.set_printoptions(precision=4, suppress=True)

    for shape, j in [((2, 1), 2), ((2, 2), 3), ((3, 1), 3)]:
        k = len(shape)
        full = young_orthogonal_generator(shape, j, k)
        small = restricted_generator(shape, j, k)
        print(f"shape {shape}, transposition ({j},{j + 1}):")
        print(f"  full {full.shape[0]}x{full.shape[0]} tableau action:")
        for row in full:
            print("   ", row)
        print(f"  restricted A+S corner ({small.shape[0]}x{small.shape[0]}):")
        for row in small:
            print("   ", row)
        print()

    t = schur_transform(2, 2)
    print("basis change for two qubits (rows labeled shape/tableau/weight):")
    for label, row in zip(t.row_labels, t.matrix.real):
        print(f"  {label}: {row}")


if __name__ == "__main__":
    main()
