"""Maps between prosets that induce ring homs, and the colimits they admit.

A map is admissible when it preserves order and, on each connected component
of its domain, is either constant or an embedding onto a convex subproset.
Admissible maps pull matrices back contravariantly.  Pushouts and
coequalizers exist but may collapse components: starting from the forced
identifications, any component a leg fails to treat admissibly is flattened
to a point, repeated to a fixed point.  That is the least quotient making
both legs admissible, and the mediating-map property is exact for it.
"""

import itertools

from .errors import (
    IncompatibleOperands,
    NoValidCutPair,
    NotComposable,
    NotConvexImage,
    NotFcc,
    NotIrreducible,
    NotOrderPreserving,
    NotParallel,
)
from .matrices import IncMatrix, identity, scalar_diag, unit
from .prosets import Proset, elem_key
from .rings import PrimeField

__all__ = [
    "FccMap",
    "validate_fcc",
    "induced_hom",
    "compose",
    "identity_map",
    "functoriality_check",
    "surjectivity_report",
    "coproduct",
    "coproduct_mediator",
    "pushout",
    "pushout_mediator",
    "coequalizer",
    "equalizer_check",
    "direct_limit_window_check",
    "generation_decompose",
    "reassemble",
]


class FccMap:
    """A map of prosets given by an explicit dict on elements."""

    def __init__(self, domain, codomain, mapping):
        self.domain = domain
        self.codomain = codomain
        self.mapping = dict(mapping)
        for s in domain.elements:
            if s not in self.mapping:
                raise ValueError("no image for %r" % (s,))
            if self.mapping[s] not in codomain:
                raise ValueError("image %r is not in the codomain" % (self.mapping[s],))

    def __call__(self, s):
        return self.mapping[s]

    def image(self):
        return set(self.mapping.values())

    def is_surjective(self):
        return self.image() == set(self.codomain.elements)

    def __eq__(self, other):
        return (
            isinstance(other, FccMap)
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self.mapping == other.mapping
        )

    def __hash__(self):
        return hash((self.domain, self.codomain, tuple(sorted(self.mapping.items(), key=lambda kv: elem_key(kv[0])))))

    def __repr__(self):
        return "FccMap(%r)" % (self.mapping,)


def validate_fcc(f):
    """Check admissibility.  Returns one record per component of the domain,
    ('constant', component, value) or ('embedding', component).  Raises
    NotOrderPreserving, NotConvexImage or NotFcc."""
    dom, cod = f.domain, f.codomain
    for (s1, s2) in dom.pairs():
        if not cod.leq(f(s1), f(s2)):
            raise NotOrderPreserving(
                "%r <= %r but %r is not <= %r" % (s1, s2, f(s1), f(s2))
            )
    out = []
    for comp in dom.components():
        comp = sorted(comp, key=elem_key)
        values = {f(s) for s in comp}
        if len(values) == 1:
            v = next(iter(values))
            if not cod.is_convex([v]):
                raise NotConvexImage(
                    "component %r is constant at %r, whose singleton is not "
                    "convex downstream" % (comp, v)
                )
            out.append(("constant", tuple(comp), v))
            continue
        if len(values) < len(comp):
            raise NotFcc("component %r is neither constant nor injective" % (comp,))
        for s1 in comp:
            for s2 in comp:
                if s1 != s2 and cod.leq(f(s1), f(s2)) and not dom.leq(s1, s2):
                    raise NotFcc(
                        "component %r does not embed: order appears between "
                        "%r and %r only downstream" % (comp, s1, s2)
                    )
        sub = dom.restrict(comp)
        for size in range(1, len(comp) + 1):
            for cand in itertools.combinations(comp, size):
                if not sub.is_convex(cand):
                    continue
                img = [f(s) for s in cand]
                if not cod.is_convex(img):
                    raise NotConvexImage(
                        "convex %r has non-convex image %r" % (cand, sorted(img, key=elem_key))
                    )
        out.append(("embedding", tuple(comp)))
    return out


def identity_map(pro):
    return FccMap(pro, pro, {s: s for s in pro.elements})


def compose(f, g):
    """Diagrammatic composite of f then g."""
    if f.codomain != g.domain:
        raise NotComposable("codomain of the first map is not the domain of the second")
    return FccMap(f.domain, g.codomain, {s: g(f(s)) for s in f.domain.elements})


def induced_hom(f, matrix):
    """Pull a matrix over the codomain back along an admissible map.

    The (t1, t2) entry is the (f(t1), f(t2)) entry upstream, except that
    distinct points of a collapsed component only receive the diagonal."""
    if matrix.pro != f.codomain:
        raise IncompatibleOperands("matrix lives over a different proset")
    entries = {}
    dom = f.domain
    for (t1, t2) in dom.pairs():
        if t1 != t2 and f(t1) == f(t2):
            continue
        v = matrix.entry(f(t1), f(t2))
        if v != matrix.ring.zero:
            entries[(t1, t2)] = v
    return IncMatrix(dom, matrix.ring, entries)


def functoriality_check(f, g, ring, samples, rng, random_matrix):
    """Spot-check that pulling back is a unital ring hom and contravariant in
    the map: applying the composite equals applying the maps innermost last."""
    gf = compose(f, g)
    validate_fcc(gf)
    checked = failures = 0
    for _ in range(samples):
        a = random_matrix(g.codomain, ring, rng)
        b = random_matrix(g.codomain, ring, rng)
        lhs = induced_hom(gf, a)
        rhs = induced_hom(f, induced_hom(g, a))
        if lhs != rhs:
            failures += 1
        ga = induced_hom(g, a)
        gb = induced_hom(g, b)
        if induced_hom(g, a.mul(b)) != ga.mul(gb):
            failures += 1
        if induced_hom(g, a.add(b)) != ga.add(gb):
            failures += 1
        checked += 3
    return {"samples": samples, "checked": checked, "failures": failures}


def surjectivity_report(f, ring):
    """Whether every order pair downstream is hit by a comparable pair
    upstream, and whether the induced hom is injective.  Pair-surjectivity
    forces injectivity: basis units at distinct pairs pull back to matrices
    with disjoint supports, nonzero exactly when the pair lifts."""
    dom, cod = f.domain, f.codomain
    lifted = set()
    for (t1, t2) in dom.pairs():
        if t1 == t2 or f(t1) != f(t2):
            lifted.add((f(t1), f(t2)))
    pair_surjective = lifted == set(cod.pairs())
    injective = True
    for (s1, s2) in cod.pairs():
        probe = IncMatrix(cod, ring, {(s1, s2): ring.one})
        if induced_hom(f, probe).is_zero():
            injective = False
            break
    return {
        "element_surjective": f.is_surjective(),
        "pair_surjective": pair_surjective,
        "hom_injective": injective,
        "implication_holds": (not pair_surjective) or injective,
    }


# -- colimits -----------------------------------------------------------------


def coproduct(prosets):
    """Disjoint union with tagged elements, plus the injections."""
    elements = []
    rel = []
    for i, pro in enumerate(prosets):
        elements.extend((i, s) for s in pro.elements)
        rel.extend(((i, s1), (i, s2)) for (s1, s2) in pro.pairs())
    total = Proset(elements, rel)
    injections = [
        FccMap(pro, total, {s: (i, s) for s in pro.elements})
        for i, pro in enumerate(prosets)
    ]
    return total, injections


def coproduct_mediator(injections, maps):
    """The unique map out of a disjoint union restricting to the given maps."""
    if len(injections) != len(maps):
        raise IncompatibleOperands("need one map per summand")
    total = injections[0].codomain
    cod = maps[0].codomain
    mapping = {}
    for inj, m in zip(injections, maps):
        if m.codomain != cod:
            raise IncompatibleOperands("maps target different prosets")
        for s in inj.domain.elements:
            mapping[inj(s)] = m(s)
    h = FccMap(total, cod, mapping)
    validate_fcc(h)
    return h


class _Partition:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if elem_key(ry) < elem_key(rx):
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True

    def classes(self):
        buckets = {}
        for x in self.parent:
            buckets.setdefault(self.find(x), set()).add(x)
        return {root: frozenset(members) for root, members in buckets.items()}


def _quotient_of(parts, carriers):
    """Quotient proset of tagged carriers by a partition: classes become
    frozensets, order is the transitive closure of the pushed-down relations."""
    classes = parts.classes()
    label = {x: classes[parts.find(x)] for x in parts.parent}
    rel = []
    for i, pro in carriers:
        for (s1, s2) in pro.pairs():
            rel.append((label[(i, s1)], label[(i, s2)]))
    return Proset(set(classes.values()), rel), label


def _forced_collapse(parts, carriers):
    """Grow the partition until every leg is admissible into the quotient.
    A component a leg sends non-injectively, or embeds without reflecting
    order or onto a non-convex image, is flattened to one class."""
    while True:
        quo, label = _quotient_of(parts, carriers)
        changed = False
        for i, pro in carriers:
            for comp in pro.components():
                comp = sorted(comp, key=elem_key)
                imgs = [label[(i, s)] for s in comp]
                flatten = False
                if len(set(imgs)) == 1:
                    cls = quo.equiv_class(imgs[0])
                    if len(cls) > 1:
                        members = [x for c in cls for x in c]
                        for x in members[1:]:
                            changed |= parts.union(members[0], x)
                    continue
                if len(set(imgs)) < len(imgs):
                    flatten = True
                if not flatten:
                    sub = pro.restrict(comp)
                    for s1 in comp:
                        for s2 in comp:
                            if s1 != s2 and quo.leq(label[(i, s1)], label[(i, s2)]) and not sub.leq(s1, s2):
                                flatten = True
                                break
                        if flatten:
                            break
                if not flatten and not quo.is_convex(set(imgs)):
                    flatten = True
                if flatten:
                    first = comp[0]
                    for s in comp[1:]:
                        changed |= parts.union((i, first), (i, s))
        if not changed:
            return _quotient_of(parts, carriers)


def pushout(f, g):
    """Pushout of the span along f and g out of a common proset.

    Returns (object, leg1, leg2).  Seeds identify f(s) with g(s), the forced
    collapse makes both legs admissible, and the result is least: any
    commuting admissible pair is already constant on whatever gets flattened,
    so the mediating map always exists (pushout_mediator recovers it)."""
    if f.domain != g.domain:
        raise IncompatibleOperands("legs of the span start at different prosets")
    carriers = [(1, f.codomain), (2, g.codomain)]
    items = [(1, s) for s in f.codomain.elements] + [(2, s) for s in g.codomain.elements]
    parts = _Partition(items)
    for s in f.domain.elements:
        parts.union((1, f(s)), (2, g(s)))
    quo, label = _forced_collapse(parts, carriers)
    q1 = FccMap(f.codomain, quo, {s: label[(1, s)] for s in f.codomain.elements})
    q2 = FccMap(g.codomain, quo, {s: label[(2, s)] for s in g.codomain.elements})
    validate_fcc(q1)
    validate_fcc(q2)
    return quo, q1, q2


def pushout_mediator(q1, q2, h1, h2):
    """Recover the unique map out of a pushout agreeing with h1, h2 on the
    legs.  Raises if the pair is not constant on some identified class."""
    if h1.codomain != h2.codomain:
        raise IncompatibleOperands("maps target different prosets")
    mapping = {}
    for q, h in ((q1, h1), (q2, h2)):
        for s in q.domain.elements:
            cls = q(s)
            v = h(s)
            if cls in mapping and mapping[cls] != v:
                raise IncompatibleOperands(
                    "the pair is not constant on the identified class %r" % (cls,)
                )
            mapping[cls] = v
    h = FccMap(q1.codomain, h1.codomain, mapping)
    validate_fcc(h)
    return h


def coequalizer(f1, f2):
    """Coequalizer of a parallel pair: identify f1(t) with f2(t), run the
    forced collapse, then flatten every quotient component in which points
    from different equivalence classes were glued.

    The last pass is what keeps the pulled-back hom injective.  Without it,
    gluing across pieces of the codomain can manufacture a quotient pair by
    transitivity that no order pair of the codomain maps onto, and the basis
    unit at such a pair would pull back to zero.  After the pass every class
    sits inside a single equivalence class, so any chain witnessing an order
    pair of the quotient splices into an order pair of the codomain."""
    if f1.domain != f2.domain or f1.codomain != f2.codomain:
        raise NotParallel("the maps are not a parallel pair")
    cod = f1.codomain
    carriers = [(1, cod)]
    parts = _Partition([(1, s) for s in cod.elements])
    for t in f1.domain.elements:
        parts.union((1, f1(t)), (1, f2(t)))
    while True:
        quo, label = _forced_collapse(parts, carriers)
        changed = False
        for comp in quo.components():
            glued = any(
                not (cod.leq(a, b) and cod.leq(b, a))
                for cls in comp
                for (_, a) in cls
                for (_, b) in cls
            )
            if glued:
                members = [x for cls in comp for x in cls]
                for x in members[1:]:
                    changed |= parts.union(members[0], x)
        if not changed:
            break
    q = FccMap(cod, quo, {s: label[(1, s)] for s in cod.elements})
    validate_fcc(q)
    return quo, q


def _spanning_set(pro, ring):
    """Identity, a couple of scalar diagonals, and every basis unit."""
    mats = [identity(pro, ring), scalar_diag(pro, ring, ring.add(ring.one, ring.one))]
    for (s1, s2) in pro.pairs():
        mats.append(unit(pro, ring, s1, s2))
    return mats


def _probe_factors(f1, f2, p, h, ring):
    if h.domain != f1.codomain:
        return {"factors": False, "reason": "probe does not start at the codomain"}
    if compose(f1, h) != compose(f2, h):
        return {"factors": False, "reason": "does not commute with the pair"}
    mapping = {}
    for s in h.domain.elements:
        cls = p(s)
        if cls in mapping and mapping[cls] != h(s):
            return {"factors": False, "reason": "not constant on an identified class"}
        mapping[cls] = h(s)
    u = FccMap(p.codomain, h.codomain, mapping)
    try:
        validate_fcc(u)
    except (NotOrderPreserving, NotConvexImage, NotFcc) as exc:
        return {"factors": False, "reason": type(exc).__name__}
    for x in _spanning_set(h.codomain, ring):
        if induced_hom(h, x) != induced_hom(p, induced_hom(u, x)):
            return {"factors": False, "reason": "factoring breaks on the spanning set"}
    return {"factors": True}


def equalizer_check(f1, f2, ring=None, probes=()):
    """Audit that pulling back along the coequalizer leg equalizes the pair.

    Builds the coequalizer (quo, p) and verifies over the ring (GF(2) when
    omitted), on the spanning set of the quotient ring, that the pullback
    along p is equalized by the pullbacks along f1 and f2 and is injective.
    Each probe map h out of the shared codomain with h after f1 == h after
    f2 must then factor ring-side through p via the mediating map read off
    the quotient classes.  The leg itself and the collapse of the quotient
    onto its components are always probed; more maps can be passed in."""
    if f1.domain != f2.domain or f1.codomain != f2.codomain:
        raise NotParallel("the maps are not a parallel pair")
    if ring is None:
        ring = PrimeField(2)
    quo, p = coequalizer(f1, f2)
    equalizes = all(
        induced_hom(f1, induced_hom(p, x)) == induced_hom(f2, induced_hom(p, x))
        for x in _spanning_set(quo, ring)
    )
    injective = True
    seen = []
    for (s1, s2) in quo.pairs():
        support = set(induced_hom(p, unit(quo, ring, s1, s2)).entries)
        if not support or any(support & other for other in seen):
            injective = False
            break
        seen.append(support)
    comps = sorted(
        (sorted(c, key=elem_key) for c in quo.components()),
        key=lambda c: elem_key(c[0]),
    )
    points = Proset(list(range(len(comps))), [])
    collapse = FccMap(quo, points, {s: i for i, comp in enumerate(comps) for s in comp})
    reports = [
        _probe_factors(f1, f2, p, h, ring)
        for h in [p, compose(p, collapse)] + list(probes)
    ]
    return {
        "equalizes": equalizes,
        "injective": injective,
        "probes": reports,
        "passed": equalizes and injective and all(r["factors"] for r in reports),
    }


def direct_limit_window_check(family, ring, ks, samples, rng, random_matrix):
    """Windows of a family form a tower of convex inclusions; their induced
    homs are the window projections.  Checks the tower commutes on random
    matrices over the largest window."""
    ks = sorted(ks)
    windows = [family.window(k) for k in ks]
    prosets = [family.restrict(w) for w in windows]
    incs = [
        FccMap(prosets[i], prosets[i + 1], {s: s for s in prosets[i].elements})
        for i in range(len(prosets) - 1)
    ]
    for inc in incs:
        validate_fcc(inc)
    failures = 0
    for _ in range(samples):
        top = random_matrix(prosets[-1], ring, rng)
        for i in range(len(prosets) - 1):
            direct = top
            for j in range(len(prosets) - 2, i - 1, -1):
                direct = induced_hom(incs[j], direct)
            chain = compose_chain(incs[i:])
            if direct != induced_hom(chain, top):
                failures += 1
    return {"windows": [sorted(w, key=elem_key) for w in windows],
            "samples": samples, "failures": failures}


def compose_chain(maps):
    out = maps[0]
    for m in maps[1:]:
        out = compose(out, m)
    return out


# -- generation by two-class blocks --------------------------------------------------


def _class_pairs(pro):
    reps = sorted({min(pro.equiv_class(s), key=elem_key) for s in pro.elements}, key=elem_key)
    return [(a, b) for a in reps for b in reps if a != b]


def generation_decompose(pro):
    """Split a connected proset along a pair of classes whose removal leaves
    connected overlapping pieces whose pushout rebuilds the whole thing, down
    to leaves with at most two classes."""
    if not pro.is_irreducible():
        raise NotIrreducible("decomposition starts from a connected proset")
    classes = pro.classes()
    if len(classes) <= 2:
        sizes = sorted(len(c) for c in classes)
        return {"leaf": True, "proset": pro, "classes": len(classes), "sizes": sizes}
    for a, b in _class_pairs(pro):
        na = set(pro.equiv_class(a))
        nb = set(pro.equiv_class(b))
        left = [s for s in pro.elements if s not in nb]
        right = [s for s in pro.elements if s not in na]
        mid = [s for s in pro.elements if s not in na and s not in nb]
        if not left or not right or not mid:
            continue
        pl, pr, pm = pro.restrict(left), pro.restrict(right), pro.restrict(mid)
        # the pieces recurse, so they must be connected; the overlap may fall
        # apart (gluing a vee to a wedge across a two-point antichain is how
        # the diamond arises), its components just embed piecewise
        if not (pl.is_irreducible() and pr.is_irreducible()):
            continue
        fl = FccMap(pm, pl, {s: s for s in mid})
        fr = FccMap(pm, pr, {s: s for s in mid})
        try:
            validate_fcc(fl)
            validate_fcc(fr)
        except (NotOrderPreserving, NotConvexImage, NotFcc):
            continue
        quo, q1, q2 = pushout(fl, fr)
        iso = _pushout_matches(pro, quo, q1, q2, left, right)
        if iso is None:
            continue
        return {
            "leaf": False,
            "proset": pro,
            "cut": (a, b),
            "left": generation_decompose(pl),
            "right": generation_decompose(pr),
        }
    raise NoValidCutPair("no class pair splits this proset")


def _pushout_matches(pro, quo, q1, q2, left, right):
    """The reassembled pushout matches when sending each original element to
    its class is an isomorphism."""
    if len(quo.elements) != len(pro.elements):
        return None
    mapping = {}
    for s in left:
        mapping[s] = q1(s)
    for s in right:
        if s in mapping and mapping[s] != q2(s):
            return None
        mapping[s] = q2(s)
    if len(set(mapping.values())) != len(pro.elements):
        return None
    for (s1, s2) in pro.pairs():
        if not quo.leq(mapping[s1], mapping[s2]):
            return None
    for s1 in pro.elements:
        for s2 in pro.elements:
            if quo.leq(mapping[s1], mapping[s2]) and not pro.leq(s1, s2):
                return None
    return mapping


def reassemble(tree):
    """Rebuild the proset of a decomposition tree from its leaves by the same
    pushouts, to confirm nothing was lost.  The rebuilt pieces carry their own
    labels, so the overlap is carried over through an isomorphism; gluing an
    isomorphic span gives an isomorphic pushout."""
    if tree["leaf"]:
        return tree["proset"]
    pro = tree["proset"]
    a, b = tree["cut"]
    na = set(pro.equiv_class(a))
    nb = set(pro.equiv_class(b))
    left = [s for s in pro.elements if s not in nb]
    right = [s for s in pro.elements if s not in na]
    mid = [s for s in pro.elements if s not in na and s not in nb]
    pl = reassemble(tree["left"])
    pr = reassemble(tree["right"])
    pm = pro.restrict(mid)
    iso_l = pro.restrict(left).poset_isomorphic(pl)
    iso_r = pro.restrict(right).poset_isomorphic(pr)
    if iso_l is None or iso_r is None:
        raise NoValidCutPair("a rebuilt piece lost its shape")
    fl = FccMap(pm, pl, {s: iso_l[s] for s in mid})
    fr = FccMap(pm, pr, {s: iso_r[s] for s in mid})
    quo, q1, q2 = pushout(fl, fr)
    return quo
