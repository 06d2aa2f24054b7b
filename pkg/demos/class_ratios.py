"""Tableau class ratios and where they go as diagrams grow.

Counting standard tableaux whose first column starts 1..k-1 followed by
k or by k+1 gives the A and S classes. Their ratio has an exact rational
closed form, and along growing rectangles it falls toward 1/(k^2 - 1),
the value reached exactly in the balanced limit.
"""

from fractions import Fraction

from kblockpos.shifted_schur import asymptotic_ratio, ratio_a_over_s


def main() -> None:
    for k in (2, 3):
        bound = Fraction(1, k * k - 1)
        print(f"k = {k}, rectangles (m^{k}), limit 1/(k^2-1) = {bound}:")
        for m in (2, 3, 5, 10, 20, 40):
            r = ratio_a_over_s((m,) * k, k)
            print(f"  m = {m:>3}: A/S = {r} = {float(r):.6f}")
        print()

    print("asymptotic ratio for fixed row fractions:")
    for weights in [
        (Fraction(1, 2), Fraction(1, 2)),
        (Fraction(3, 4), Fraction(1, 4)),
        (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)),
        (Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)),
    ]:
        r = asymptotic_ratio(weights)
        tag = "  <- meets the bound" if r.at_bound else ""
        print(f"  {tuple(str(w) for w in weights)}: {r.value}{tag}")


if __name__ == "__main__":
    main()
