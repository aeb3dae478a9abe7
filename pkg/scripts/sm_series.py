#!/usr/bin/env python3
"""Component table for the symmetric-group pair series.

For each m, pair the degree-m standard cover with the induced cover on
unordered pairs and tabulate the fiber-product components: degrees,
genuses by both methods, and the quadratic growth of the large
component's genus.
"""

import argparse

from fibercover import catalog


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-m", type=int, default=5)
    parser.add_argument("--max-m", type=int, default=9)
    args = parser.parse_args()
    print(f"{'m':>3} {'deg_z':>6} {'k':>4} {'l':>4} {'genus(M1)':>10} "
          f"{'genus(M2)':>10}")
    for m in range(args.min_m, args.max_m + 1):
        pair = catalog.build_sm_pair(m)
        for c in sorted(pair.components, key=lambda c: len(c.orbit)):
            print(f"{m:>3} {c.deg_over_z:>6} {c.deg_over_x:>4} "
                  f"{c.deg_over_y:>4} {c.genus_method1:>10} "
                  f"{c.genus_method2:>10}")


if __name__ == "__main__":
    main()
