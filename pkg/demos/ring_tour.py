"""Tour of the finite incidence ring: generators, products, inversion,
and projection onto a convex window.

Run as:  python3 demos/ring_tour.py
"""

import random

from incring.glgroup import invert, random_invertible
from incring.matrices import identity, indicator, scalar_diag, unit
from incring.prosets import NFamily, Proset
from incring.rings import ModRing, PrimeField


def main():
    vee = Proset(["r", "x", "y"], [("r", "x"), ("r", "y")])
    f5 = PrimeField(5)
    print("proset:", vee)
    print("order pairs:", vee.pairs())

    e_rx = unit(vee, f5, "r", "x")
    e_ry = unit(vee, f5, "r", "y")
    one_r = indicator(vee, f5, ["r"])
    print("\ne(r,x) * e(r,y) =", e_rx.mul(e_ry), "  (composable only through r)")
    print("1^{r} * e(r,x) =", one_r.mul(e_rx))
    print("e(r,x) * 1^{r} =", e_rx.mul(one_r))
    print("scalar 2 commutes with e(r,x):",
          scalar_diag(vee, f5, 2).mul(e_rx) == e_rx.mul(scalar_diag(vee, f5, 2)))

    rng = random.Random(2)
    a = random_invertible(vee, f5, rng)
    ai = invert(a)
    print("\nrandom unit  a =", a)
    print("its inverse ai =", ai)
    print("a * ai == ai * a == 1:",
          a.mul(ai) == identity(vee, f5) == ai.mul(a))

    # the natural numbers, truncated to the convex window {0..4}, then
    # projected further to {0,1,2}; projection is a ring map
    fam = NFamily()
    z8 = ModRing(8)
    wpro = fam.restrict(fam.window(4))
    b = random_invertible(wpro, z8, rng)
    c = random_invertible(wpro, z8, rng)
    sub = [0, 1, 2]
    lhs = b.mul(c).project(sub)
    rhs = b.project(sub).mul(c.project(sub))
    print("\nwindow {0..4} over Z/8, projecting to {0,1,2}:")
    print("project(b*c) == project(b)*project(c):", lhs == rhs)


if __name__ == "__main__":
    main()
