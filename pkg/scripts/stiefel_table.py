"""Tabulate U(n)/U(k) data: sphere dimensions, Poincare series, chi^tor stages and Bott orders.

    python scripts/stiefel_table.py --max-n 6
"""

import argparse

from fixity.topology import (
    bott_order,
    chi_tor_stages,
    format_poly,
    poincare_series,
    sphere_dims,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    print("n  n!      ")
    for n in range(1, args.max_n + 3):
        print(f"{n:<2d} {bott_order(n)}")
    print()
    for n in range(2, args.max_n + 1):
        for k in range(1, n):
            stages = chi_tor_stages(n, k)
            degrees = ",".join(f"{s.j}:{s.degree}" for s in stages) or "-"
            agree = all(s.by_exponent == s.by_cone for s in stages)
            print(f"U({n})/U({k})  spheres {sphere_dims(n, k)}")
            print(f"    P(t) = {format_poly(poincare_series(n, k))}")
            print(f"    stage degrees {degrees}  routes agree {agree}  chi_tor 1")
            assert agree


if __name__ == "__main__":
    main()
