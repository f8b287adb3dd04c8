"""Maps of prosets that are constant or a convex embedding on each
component, the ring homomorphisms they pull back, and the colimits the
category supports.

Run as:  python3 demos/functor_walkthrough.py
"""

from incring.functor_cat import (
    FccMap,
    coequalizer,
    compose,
    equalizer_check,
    induced_hom,
    pushout,
)
from incring.matrices import unit
from incring.prosets import Proset
from incring.rings import PrimeField


def main():
    ring = PrimeField(5)

    # a convex embedding of the 2-chain into the 3-chain pulls the bigger
    # ring back onto the smaller one coordinatewise
    chain3 = Proset([0, 1, 2], [(0, 1), (1, 2)])
    chain2 = Proset(["a", "b"], [("a", "b")])
    emb = FccMap(chain2, chain3, {"a": 0, "b": 1})
    e01 = unit(chain3, ring, 0, 1)
    print("embedding a,b -> 0,1 pulls e(0,1) back to:", induced_hom(emb, e01))
    e12 = unit(chain3, ring, 1, 2)
    print("and e(1,2), whose support misses the image, to:",
          induced_hom(emb, e12))

    # a pushout glues two maps out of a shared apex
    apex = Proset(["t"], [])
    f = FccMap(apex, chain3, {"t": 0})
    g = FccMap(apex, chain2, {"t": "a"})
    quo, q1, q2 = pushout(f, g)
    print("\npushout of 3-chain <- point -> 2-chain:", quo)
    print("square commutes:", compose(f, q1) == compose(g, q2))

    # gluing across components: the quotient must flatten the whole glued
    # piece, otherwise transitivity would forge a pair that nothing covers
    cod = Proset(["x", "y1", "y2", "z"], [("x", "y1"), ("y2", "z")])
    f1 = FccMap(apex, cod, {"t": "y1"})
    f2 = FccMap(apex, cod, {"t": "y2"})
    quo2, leg = coequalizer(f1, f2)
    print("\ncoequalizer gluing y1 ~ y2 across two chains:", quo2)
    report = equalizer_check(f1, f2)
    print("leg equalizes:", report["equalizes"])
    print("pulled-back hom injective:", report["injective"])
    print("mediator probes factor:", report["probes"])
    print("audit passed:", report["passed"])


if __name__ == "__main__":
    main()
