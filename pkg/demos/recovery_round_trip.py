"""Hide a poset inside its incidence ring, hand out only opaque ring
operations, and get the poset back from idempotent bookkeeping alone.

Run as:  python3 demos/recovery_round_trip.py
"""

import random

from incring.prosets import Proset
from incring.recovery import BundleAccess, recover_poset, scramble
from incring.rings import PrimeField


def main():
    diamond = Proset(
        ["bot", "l", "r", "top"],
        [("bot", "l"), ("bot", "r"), ("l", "top"), ("r", "top")],
    )
    ring = PrimeField(2)
    print("original:", diamond)

    bundle, _ = scramble(diamond, ring, seed=5, samples=64)
    access = BundleAccess(bundle, ring)
    print("scrambled bundle: dimension %d over %s, labels erased"
          % (bundle["dim"], ring))

    rec = recover_poset(access, mode="witness", budget=10 ** 5,
                        rng=random.Random(1))
    print("recovered:", rec)
    mapping = rec.poset_isomorphic(diamond)
    print("isomorphic to the original:", mapping is not None)
    print("one witnessing relabeling:", mapping)
    print("ring operations spent:", access.ops)


if __name__ == "__main__":
    main()
