"""Enumerating small prosets up to isomorphism, and random generators used
throughout the tests.

Posets are enumerated by repeatedly adjoining a new maximal element over
every downward-closed subset, discarding isomorphic duplicates; the counts
1, 2, 5, 16, 63 for one through five points are a useful cross-check.
Prosets come from blowing up poset types on the class quotient by all ways
of assigning class sizes.
"""

import itertools

from .matrices import IncMatrix
from .prosets import Proset, elem_key

__all__ = [
    "enumerate_posets",
    "enumerate_prosets",
    "irreducible_posets",
    "irreducible_prosets",
    "random_poset",
    "random_proset",
    "random_matrix",
    "random_fcc_map",
    "random_finitary",
]


def _downsets(pro):
    els = list(pro.elements)
    for mask in range(2 ** len(els)):
        sub = {els[i] for i in range(len(els)) if mask >> i & 1}
        if all(t in sub for s in sub for t in pro.elements if pro.leq(t, s)):
            yield sub


def enumerate_posets(n):
    """All posets on exactly n points, up to isomorphism, on labels 0..n-1."""
    if n == 0:
        return [Proset([], [])]
    found = [Proset([0], [])]
    for size in range(2, n + 1):
        fresh = []
        for pro in found:
            for below in _downsets(pro):
                rel = list(pro.pairs()) + [(s, size - 1) for s in below]
                cand = Proset(list(pro.elements) + [size - 1], rel)
                if not any(cand.poset_isomorphic(q) for q in fresh):
                    fresh.append(cand)
        found = fresh
    return found


def _compositions(n, k):
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def _blow_up(quotient, sizes):
    elements = []
    rel = []
    classes = list(quotient.elements)
    for i, c in enumerate(classes):
        elements.extend((i, j) for j in range(sizes[i]))
    for i, c1 in enumerate(classes):
        for k, c2 in enumerate(classes):
            if quotient.leq(c1, c2):
                rel.extend(
                    ((i, j1), (k, j2))
                    for j1 in range(sizes[i])
                    for j2 in range(sizes[k])
                )
    return Proset(elements, rel)


def enumerate_prosets(n):
    """All prosets on exactly n points up to isomorphism: poset types on the
    class quotient, blown up by every class-size assignment."""
    out = []
    for k in range(1, n + 1):
        for quotient in enumerate_posets(k):
            for sizes in _compositions(n, k):
                cand = _blow_up(quotient, sizes)
                if not any(cand.poset_isomorphic(q) for q in out):
                    out.append(cand)
    return out


def irreducible_posets(n):
    return [p for p in enumerate_posets(n) if p.is_irreducible()]


def irreducible_prosets(n):
    return [p for p in enumerate_prosets(n) if p.is_irreducible()]


def random_poset(n, rng, density=0.35):
    """Random poset: random relations along a shuffled linear order."""
    order = list(range(n))
    rng.shuffle(order)
    rel = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                rel.append((order[i], order[j]))
    return Proset(range(n), rel)


def random_proset(n, rng, density=0.35):
    """Random proset: random class sizes over a random poset of classes."""
    k = rng.randint(1, n)
    cuts = sorted(rng.sample(range(1, n), k - 1)) if k > 1 else []
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    quotient = random_poset(k, rng, density)
    return _blow_up(quotient, sizes)


def random_matrix(pro, ring, rng, density=0.6):
    entries = {}
    for p in pro.pairs():
        if rng.random() < density:
            v = ring.random(rng)
            if v != ring.zero:
                entries[p] = v
    return IncMatrix(pro, ring, entries)


def _component_embeddings(comp, dom, cod):
    """All maps of one connected component that are embeddings onto a convex
    image, found by backtracking along a fixed element order."""
    comp = sorted(comp, key=elem_key)
    sub = dom.restrict(comp)
    results = []

    def extend(assigned):
        if len(assigned) == len(comp):
            img = list(assigned.values())
            if cod.is_convex(img):
                results.append(dict(assigned))
            return
        s = comp[len(assigned)]
        for t in cod.elements:
            if t in assigned.values():
                continue
            good = True
            for s0, t0 in assigned.items():
                if sub.leq(s0, s) != cod.leq(t0, t) or sub.leq(s, s0) != cod.leq(t, t0):
                    good = False
                    break
            if good:
                assigned[s] = t
                extend(assigned)
                del assigned[s]

    extend({})
    return results


def random_fcc_map(dom, cod, rng, constant_bias=0.5):
    """Random admissible map: each component flips between a constant onto a
    trivial-class point and a random convex embedding, each side falling back
    to the other when no choice exists."""
    from .functor_cat import FccMap

    mapping = {}
    flat = [s for s in cod.elements if len(cod.equiv_class(s)) == 1]
    for comp in dom.components():
        comp = sorted(comp, key=elem_key)
        options = None
        if not flat or rng.random() >= constant_bias:
            options = _component_embeddings(comp, dom, cod)
        if options:
            choice = options[rng.randrange(len(options))]
            mapping.update(choice)
        elif flat:
            target = flat[rng.randrange(len(flat))]
            mapping.update({s: target for s in comp})
        else:
            raise ValueError(
                "component %r has no admissible image in the codomain" % (comp,)
            )
    return FccMap(dom, cod, mapping)


def random_finitary(family, ring, rng, span=3, density=0.5, invertible=True):
    """Random finitary element supported inside window(span).  With
    `invertible` the diagonal stays on units, so over poset families the
    element is a unit."""
    from .lazy import lazy_finitary

    window = list(family.window(span))
    sub = family.restrict(window)
    off = {}
    for (s1, s2) in sub.strict_pairs():
        if rng.random() < density:
            v = ring.random(rng)
            if v != ring.zero:
                off[(s1, s2)] = v
    exceptions = {}
    for s in window:
        if rng.random() < density * 0.5:
            if invertible:
                units = [u for u in (ring.canon(-1), ring.canon(2), ring.canon(3)) if ring.is_unit(u)]
                if ring.finite:
                    units = ring.units()
                exceptions[s] = units[rng.randrange(len(units))]
            else:
                exceptions[s] = ring.random(rng)
    default = ring.one
    return lazy_finitary(family, ring, off_diag=off, exceptions=exceptions, default=default)
