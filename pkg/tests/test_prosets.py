"""Preordered sets: closure, intervals, convexity, families, enumeration."""

import random

import pytest

from incring.errors import InfiniteNeighborhood, NotComparable
from incring.prosets import (
    AugmentedFamily,
    NFamily,
    NStarDivFamily,
    Proset,
    ZFamily,
    ZigFamily,
    interval_closure,
    two_block,
)
from incring.samples import (
    enumerate_posets,
    enumerate_prosets,
    irreducible_prosets,
    random_proset,
)

CHAIN3 = Proset([0, 1, 2], [(0, 1), (1, 2)])
VEE = Proset(["p", "x", "y"], [("p", "x"), ("p", "y")])
LOOP = Proset([0, 1, 2], [(0, 1), (1, 0), (1, 2)])


def test_transitive_closure():
    assert CHAIN3.leq(0, 2)
    assert not CHAIN3.leq(2, 0)
    assert CHAIN3.leq(1, 1)
    # closing a closed relation changes nothing
    again = Proset(CHAIN3.elements, CHAIN3.pairs())
    assert again == CHAIN3


def test_intervals():
    assert CHAIN3.interval(0, 2) == (0, 1, 2)
    assert CHAIN3.interval(0, 0) == (0,)
    assert VEE.interval("x", "y") == ()
    assert LOOP.interval(0, 1) == (0, 1)  # the 2-cycle sits inside


def test_equiv_classes_and_condensation():
    assert LOOP.equiv_class(0) == frozenset([0, 1])
    assert LOOP.equiv_class(2) == frozenset([2])
    assert len(LOOP.classes()) == 2
    assert not LOOP.is_poset()
    assert CHAIN3.is_poset()


def test_neighborhoods_grow_to_component():
    n0 = VEE.neighborhood("p", 0)
    assert n0 == frozenset(["p"])
    n1 = VEE.neighborhood("p", 1)
    assert n1 == frozenset(["p", "x", "y"])
    for k in range(1, 4):
        assert VEE.neighborhood("x", k) <= frozenset(VEE.elements)


def test_interval_in_reachable_neighborhood():
    rng = random.Random(2)
    for _ in range(25):
        pro = random_proset(rng.randrange(2, 7), rng)
        for (a, b) in pro.pairs():
            k = len(pro.elements)
            assert set(pro.interval(a, b)) <= set(pro.neighborhood(a, k))


def test_components_are_irreducible():
    rng = random.Random(9)
    for _ in range(40):
        pro = random_proset(rng.randrange(1, 8), rng)
        comps = pro.components()
        assert sorted(sum((sorted(c) for c in comps), [])) == sorted(pro.elements)
        for comp in comps:
            assert pro.restrict(comp).is_irreducible()
            for s in comp:
                for t in pro.elements:
                    if pro.leq(s, t) or pro.leq(t, s):
                        assert t in comp


def test_convexity():
    chain4 = Proset(range(4), [(i, i + 1) for i in range(3)])
    assert chain4.is_convex([1, 2])
    assert not chain4.is_convex([0, 2])  # gap at 1
    assert not chain4.is_convex([0, 1, 3])
    assert chain4.convex_closure([0, 2]) == frozenset([0, 1, 2])
    assert interval_closure(chain4, [0, 2]) == frozenset([0, 1, 2])
    # convexity also needs connectivity: two far-apart points of a vee
    assert not VEE.is_convex(["x", "y"])


def test_augment():
    aug = CHAIN3.augment([frozenset([0, 2])])
    assert aug.leq(2, 0) and aug.leq(0, 2)
    assert not aug.is_poset()
    assert aug.equiv_class(0) == frozenset([0, 1, 2])  # 0~2 squeezes 1 in


def test_opposite_involution():
    rng = random.Random(4)
    for _ in range(20):
        pro = random_proset(rng.randrange(1, 7), rng)
        opp = pro.opposite()
        assert opp.opposite() == pro
        for (a, b) in pro.pairs():
            assert opp.leq(b, a)


def test_two_block():
    tb = two_block(2, 3)
    bottom = [s for s in tb.elements if str(s).startswith("b")]
    top = [s for s in tb.elements if str(s).startswith("t")]
    assert len(bottom) == 3 and len(top) == 2
    for b in bottom:
        for t in top:
            assert tb.leq(b, t) and not tb.leq(t, b)
    assert len(tb.classes()) == 2
    assert tb.is_irreducible()


def test_poset_isomorphic():
    a = Proset([0, 1, 2], [(0, 1), (0, 2)])
    b = Proset(["r", "s", "t"], [("t", "r"), ("t", "s")])
    assert a.poset_isomorphic(b) is not None
    assert a.poset_isomorphic(CHAIN3) is None
    iso = a.poset_isomorphic(b)
    assert iso[0] == "t"


def test_gamma_enumerate():
    convex = list(CHAIN3.gamma_enumerate())
    as_sets = {frozenset(c) for c in convex}
    # nonempty convex subsets of the 3-chain: three points, two edges, the whole
    assert as_sets == {
        frozenset([0]), frozenset([1]), frozenset([2]),
        frozenset([0, 1]), frozenset([1, 2]), frozenset([0, 1, 2]),
    }


# -- the infinite families ------------------------------------------------------


def test_n_family():
    fam = NFamily()
    assert fam.leq(0, 5) and not fam.leq(5, 0)
    assert fam.interval(2, 5) == (2, 3, 4, 5)
    assert set(fam.window(3)) == {0, 1, 2, 3}
    with pytest.raises(InfiniteNeighborhood):
        fam.up_set(0)
    assert not fam.has_finite_neighborhoods()


def test_z_family():
    fam = ZFamily()
    assert fam.leq(-3, 3)
    assert fam.interval(-1, 1) == (-1, 0, 1)
    assert fam.is_z_like()


def test_zig_family():
    fam = ZigFamily()
    # evens sit below their odd neighbours
    assert fam.leq(0, 1) and fam.leq(2, 1) and fam.leq(2, 3)
    assert not fam.leq(1, 0) and not fam.leq(1, 3)
    assert fam.interval(0, 1) == (0, 1)
    assert fam.interval(0, 3) == ()
    assert set(fam.window(1)) == {-1, 0, 1}
    assert fam.has_finite_neighborhoods()
    assert set(fam.up_set(2)) == {1, 2, 3}
    assert set(fam.down_set(1)) == {0, 1, 2}


def test_nstar_div_family():
    fam = NStarDivFamily()
    assert fam.leq(3, 30) and not fam.leq(4, 30)
    assert set(fam.interval(3, 30)) == {3, 6, 15, 30}
    assert set(fam.interval(2, 12)) == {2, 4, 6, 12}
    win = fam.window(2)
    assert all(fam.contains(d) for d in win)
    assert fam.is_convex(win)


def test_augmented_family():
    base = ZigFamily()
    fam = AugmentedFamily(base, [frozenset([0, 3])])
    # gluing 0 to 3 drags the fence between them into one class
    assert fam.leq(3, 0) and fam.leq(0, 3)
    assert fam.leq(2, 0)  # 2 <= 3 ~ 0
    assert set(fam.equiv_class(0)) >= {0, 3}
    win = fam.window(2)
    assert set(win) >= {-2, -1, 0, 1, 2, 3}


def test_family_windows_are_convex_and_nested():
    for fam in [NFamily(), ZFamily(), ZigFamily(), NStarDivFamily()]:
        prev = set()
        for k in range(1, 5):
            win = set(fam.window(k))
            assert prev <= win
            assert fam.is_convex(win)
            prev = win


def test_restrict_matches_family_order():
    fam = ZigFamily()
    win = fam.window(2)
    pro = fam.restrict(win)
    for a in win:
        for b in win:
            assert pro.leq(a, b) == fam.leq(a, b)


# -- enumeration ----------------------------------------------------------------


def test_poset_counts():
    assert [len(enumerate_posets(n)) for n in range(1, 6)] == [1, 2, 5, 16, 63]


def test_proset_counts():
    assert [len(enumerate_prosets(n)) for n in range(1, 5)] == [1, 3, 9, 33]


def test_enumeration_dedups_up_to_iso():
    for pro in enumerate_posets(4):
        assert pro.is_poset()
    seen = enumerate_prosets(3)
    for i, a in enumerate(seen):
        for b in seen[i + 1:]:
            assert a.poset_isomorphic(b) is None


def test_irreducible_prosets_are_irreducible():
    for n in range(1, 5):
        for pro in irreducible_prosets(n):
            assert pro.is_irreducible()


def test_not_comparable_raises():
    with pytest.raises(NotComparable):
        from incring.matrices import unit
        from incring.rings import ZZ
        unit(VEE, ZZ, "x", "y")
