#!/usr/bin/env python3
"""Full reducibility report for the two built-in degree-7 cover pairs.

For each pair: the joint tuple, tensor components with degrees and both
genus computations, subgroup witnesses, and the branch cycles of each
component's projection to the y-line.
"""

import argparse

from fibercover import catalog


def report(key: str) -> None:
    pair = catalog.get(key)
    print(f"== {key}: {catalog.describe(key)}")
    print(f"   degrees: {pair.degree_x} (x) x {pair.degree_y} (y); "
          f"branch points {', '.join(pair.branch_points)}")
    print(f"   sigma: {'  '.join(str(p) for p in pair.sigma)}")
    print(f"   tau:   {'  '.join(str(p) for p in pair.tau)}")
    print(f"   joint group order: {pair.joint_group.order()}")
    for i, c in enumerate(sorted(pair.components, key=lambda c: len(c.orbit)), 1):
        witness, index = c.subgroup_witness
        print(f"   component {i}: deg_z={c.deg_over_z} k={c.deg_over_x} "
              f"l={c.deg_over_y}")
        print(f"      x-letters over y1: {c.x_orbit_over_y1}")
        print(f"      genus (orbit restriction): {c.genus_method1}")
        print(f"      genus (projection to y):   {c.genus_method2}")
        print(f"      stabilizer witness: order {witness.order()}, index {index}")
        pry = c.pry_branch_cycles()
        print(f"      projection cover: degree {pry.degree}, "
              f"monodromy order {pry.group().order()}, "
              f"genus {pry.genus()}, closure genus {pry.galois_closure_genus()}, "
              f"o-char {pry.orbifold_char()}")
        for label, cyc in zip(pry.branch_points, pry.cycles):
            print(f"         {label}: {cyc}")
    print()


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--keys",
        nargs="*",
        default=["deg7-pair-1", "deg7-pair-2"],
        help="catalog pair keys to report on",
    )
    args = parser.parse_args()
    for key in args.keys:
        report(key)


if __name__ == "__main__":
    main()
