#!/usr/bin/env python3
"""Sweep random-subset sizes and report how much of the full plane's
signature diversity each size already realizes.

Emits the same CSV shape as `areal sweep` so the rows can be merged:
variable,value,seed,set_size,classes,plane_classes,proportion
"""

import argparse
import sys
from fractions import Fraction

from areal.census import count_classes
from areal.constructions import full_plane, random_subset
from areal.rings import mod_prime_power, prime_field


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=5)
    ap.add_argument("--ell", type=int, default=1, help="1 = prime field")
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--sizes", type=int, nargs="+", default=[4, 8, 12, 16, 20])
    ap.add_argument("--seeds", type=int, nargs="+", default=[1, 2, 3])
    args = ap.parse_args()

    spec = prime_field(args.p) if args.ell == 1 else mod_prime_power(args.p, args.ell)
    plane_classes = count_classes(full_plane(spec), args.k).total_classes

    print("variable,value,seed,set_size,classes,plane_classes,proportion")
    for size in args.sizes:
        for seed in args.seeds:
            E = random_subset(spec, size, seed)
            classes = count_classes(E, args.k).total_classes
            prop = Fraction(classes, plane_classes)
            print(f"size,{size},{seed},{len(E)},{classes},{plane_classes},{float(prop)!r}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
