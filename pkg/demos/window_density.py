"""Finitary matrices over an infinite carrier: window projections, lazy
products, and units near a small window generating the window's whole
unit group after projection.

Run as:  python3 demos/window_density.py
"""

import random

from incring.lazy import lazy_mul, qz_window_check
from incring.prosets import ZigFamily
from incring.rings import PrimeField
from incring.samples import random_finitary


def main():
    fam = ZigFamily()
    f2 = PrimeField(2)
    rng = random.Random(3)

    a = random_finitary(fam, f2, rng, span=2, invertible=False)
    b = random_finitary(fam, f2, rng, span=2, invertible=False)
    win3 = fam.window(3)
    win1 = fam.window(1)
    print("zigzag windows:", sorted(win1), "inside", sorted(win3))
    ab = lazy_mul(a, b)
    agree = ab.project(win1) == a.project(win1).mul(b.project(win1))
    print("projection respects the lazy product on the inner window:", agree)
    tower = ab.project(win3).project(list(win1)) == ab.project(win1)
    print("projecting through the bigger window is the same:", tower)

    report = qz_window_check(fam, f2, fam.window(4), fam.window(1))
    print("\nunit-density report for window {-4..4} over F2:")
    for key in ("generators_lifted", "gl_inner_order", "closure_order",
                "surjective"):
        print("  %s: %s" % (key, report[key]))


if __name__ == "__main__":
    main()
