#!/usr/bin/env python3
"""Survey the built-in degree-7 Nielsen classes: representative counts,
braid orbits, the ordering action for three-branch-point classes, and
the coalescing chain of the six-involution satellite class.
"""

from fibercover import catalog, nielsen
from fibercover.permgroup import GeneratedGroup


def main() -> None:
    for key in ("deg7-class-2.4.7", "deg7-class-3.2.7", "deg7-class-2^3.7"):
        spec = catalog.get(key)
        elements = nielsen.enumerate_class(spec)
        orbits = nielsen.braid_orbits(spec)
        print(f"== {key}")
        print(f"   representatives ({spec.mode.value}): {len(elements)}")
        print(f"   braid orbit sizes: {[len(o) for o in orbits]}")
        if len(spec.class_reps) == 3:
            rep = nielsen.h3_structure(spec)
            print(f"   ordering-orbit size: {rep['ordering_orbit_size']} "
                  f"(full symmetric: {rep['full_symmetric_on_orderings']})")
        for e in elements:
            print("      " + "  ".join(str(p) for p in e))

    print("== coalescing chain (six involutions -> three classes)")
    r6 = catalog.get("deg7-pair-2^6")
    group = GeneratedGroup(7, list(catalog.get("deg7-pair-2").sigma))
    current = r6.sigma
    for at in (4, 4, 1):
        new, report = nielsen.coalesce(current, group, at=at)
        print(f"   coalesce at {at}: {'  '.join(str(p) for p in new)} "
              f"(restricted: {report['restricted']})")
        current = new
    for key in ("deg7-pair-2^6", "deg7-pair-2^3.7", "deg7-pair-2"):
        pair = catalog.get(key)
        small = min(pair.components, key=lambda c: len(c.orbit))
        print(f"   {key}: small-component genus {small.genus_method1}")


if __name__ == "__main__":
    main()
