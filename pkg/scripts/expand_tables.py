#!/usr/bin/env python3
"""Print the product-form stationary polynomials for every state of the
n-site ring that admits one (first letter 1, pattern-avoiding), together
with the partition sequence and Schubert factor labels.

Usage: python scripts/expand_tables.py [--n N] [--y-zero]
"""

import argparse

from ringtasep import formulas, perms
from ringtasep.poly import Poly


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--y-zero", action="store_true",
                    help="specialize every y variable to zero")
    args = ap.parse_args()

    for w in perms.enumerate_states(args.n):
        lams = formulas.psi_partitions(w)
        labels = formulas.factor_permutations(w)
        print(f"state {perms.perm_str(w)}")
        print(f"  partitions: {' '.join(map(str, lams)) or '(none)'}")
        print(f"  factors:    {' '.join(perms.perm_str(u) for u in labels) or '(none)'}")
        if args.y_zero:
            mu, _ = formulas.main_formula_y0(w)
            print(f"  prefactor:  {Poly.monomial(args.n, mu).to_text()}")
            print(f"  psi|y=0:    {formulas.assemble_y0(w).to_text()}")
        else:
            print(f"  prefactor:  {formulas.xy_fact(w).to_text()}")
            print(f"  psi:        {formulas.main_formula(w).to_text()}")
        print()


if __name__ == "__main__":
    main()
