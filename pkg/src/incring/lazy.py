"""Matrices over infinite families: coordinate oracles, finitary elements,
window projections realizing the inverse limit, and the augmented direct
limit aGL.

A lazy matrix answers one coordinate at a time.  Finitary ones carry a
descriptor (finite off-diagonal support, finitely many diagonal exceptions
over a scalar default) and support eager multiplication and inversion:
inverting only ever needs the finite interval closure of the support, because
all entries crossing that region vanish, so the matrix splits as a finite
block plus a scalar diagonal.
"""

from .errors import IncompatibleOperands, InfiniteNeighborhood, NotConvex, NotInvertible
from .glgroup import certify, enumerate_invertibles, invert, mulclose
from .matrices import IncMatrix, identity, unit
from .prosets import AugmentedFamily, interval_closure

__all__ = [
    "LazyMatrix",
    "lazy_from_oracle",
    "lazy_finitary",
    "lazy_identity",
    "lazy_mul",
    "lazy_invert",
    "AglElement",
    "agl_identity",
    "agl_embed",
    "agl_mul",
    "agl_invert",
    "qz_window_check",
    "named_oracle",
]


class LazyMatrix:
    """Matrix over a family, queried coordinatewise.

    `finitary` is None for pure oracles, else a triple
    (off_diag dict, diag_exceptions dict, diag_default).
    """

    def __init__(self, family, ring, oracle=None, finitary=None):
        self.family = family
        self.ring = ring
        self._memo = {}
        if finitary is not None:
            off, exc, default = finitary
            off = {k: ring.canon(v) for k, v in off.items()}
            off = {k: v for k, v in off.items() if v != ring.zero}
            for (s1, s2) in off:
                if s1 == s2 or not family.leq(s1, s2):
                    raise IncompatibleOperands(
                        "off-diagonal key (%r, %r) is not a strict order pair" % (s1, s2)
                    )
            exc = {s: ring.canon(v) for s, v in exc.items()}
            default = ring.canon(default)
            exc = {s: v for s, v in exc.items() if v != default}
            self.finitary = (off, exc, default)
            self.oracle = None
        else:
            if oracle is None:
                raise ValueError("need an oracle or a finitary descriptor")
            self.finitary = None
            self.oracle = oracle

    def entry(self, s1, s2):
        if self.finitary is not None:
            off, exc, default = self.finitary
            if s1 == s2:
                return exc.get(s1, default)
            return off.get((s1, s2), self.ring.zero)
        if not self.family.leq(s1, s2):
            return self.ring.zero
        key = (s1, s2)
        if key not in self._memo:
            self._memo[key] = self.ring.canon(self.oracle(s1, s2))
        return self._memo[key]

    def support_sites(self):
        """Elements touched by the finitary descriptor."""
        off, exc, _ = self.finitary
        sites = set(exc)
        for (a, b) in off:
            sites.add(a)
            sites.add(b)
        return sites

    def project(self, window, check_convex=True):
        """pi_window: restriction to a finite convex window, as an IncMatrix."""
        window = list(window)
        if check_convex and not self.family.is_convex(window):
            raise NotConvex("window is not convex in the family")
        sub = self.family.restrict(window)
        entries = {}
        for a in window:
            for b in window:
                if sub.leq(a, b):
                    v = self.entry(a, b)
                    if v != self.ring.zero:
                        entries[(a, b)] = v
        return IncMatrix(sub, self.ring, entries)

    def __repr__(self):
        kind = "finitary" if self.finitary is not None else "oracle"
        return "LazyMatrix(%s over %r)" % (kind, self.family)


def lazy_from_oracle(family, ring, fn):
    return LazyMatrix(family, ring, oracle=fn)


def lazy_finitary(family, ring, off_diag=(), exceptions=(), default=None):
    off = dict(off_diag)
    exc = dict(exceptions)
    if default is None:
        default = ring.one
    return LazyMatrix(family, ring, finitary=(off, exc, default))


def lazy_identity(family, ring):
    return lazy_finitary(family, ring)


def _convolve(family, ring, a, b, s1, s2):
    acc = ring.zero
    for t in family.interval(s1, s2):
        acc = ring.add(acc, ring.mul(a.entry(s1, t), b.entry(t, s2)))
    return acc


def lazy_mul(a, b):
    """Product of lazy matrices; finitary operands produce a finitary result,
    anything else a memoized convolution oracle."""
    if a.family != b.family or a.ring != b.ring:
        raise IncompatibleOperands("lazy operands over different families or rings")
    family, ring = a.family, a.ring
    if a.finitary is not None and b.finitary is not None:
        offa, exca, da = a.finitary
        offb, excb, db = b.finitary
        default = ring.mul(da, db)
        cands = set(offa) | set(offb)
        for (x, t) in offa:
            for (t2, y) in offb:
                if t == t2:
                    cands.add((x, y))
        off = {}
        for (s1, s2) in cands:
            if s1 == s2 or not family.leq(s1, s2):
                continue
            v = _convolve(family, ring, a, b, s1, s2)
            if v != ring.zero:
                off[(s1, s2)] = v
        sites = set(exca) | set(excb)
        for (x, y) in list(offa) + list(offb):
            sites.add(x)
            sites.add(y)
        exc = {}
        for s in sites:
            v = _convolve(family, ring, a, b, s, s)
            if v != default:
                exc[s] = v
        return LazyMatrix(family, ring, finitary=(off, exc, default))
    return LazyMatrix(family, ring, oracle=lambda s1, s2: _convolve(family, ring, a, b, s1, s2))


def _finitary_inverse(a):
    off, exc, default = a.finitary
    family, ring = a.family, a.ring
    if not ring.is_unit(default):
        raise NotInvertible("diagonal default %s is not a unit" % ring.format(default))
    dinv = ring.inv(default)
    sites = a.support_sites()
    if not sites:
        return LazyMatrix(family, ring, finitary=({}, {}, dinv))
    region = interval_closure(family, sites)
    # off the region every row and column is scalar `default`, so the matrix
    # splits as (block on the region) + default*identity elsewhere and the
    # block inverts inside the induced subproset
    block = a.project(region, check_convex=False)
    inv = invert(block)
    ioff = {}
    iexc = {}
    for (s1, s2), v in inv.entries.items():
        if s1 == s2:
            if v != dinv:
                iexc[s1] = v
        else:
            ioff[(s1, s2)] = v
    return LazyMatrix(family, ring, finitary=(ioff, iexc, dinv))


def lazy_invert(a):
    """Inverse of a lazy matrix.

    Finitary input gives a finitary inverse at once.  For oracles the inverse
    is computed coordinatewise: the (s1, s2) entry of the inverse only
    depends on the interval [s1, s2], so it is read off from inverting the
    projection to that interval.
    """
    family, ring = a.family, a.ring
    if a.finitary is not None:
        return _finitary_inverse(a)

    def coord(s1, s2):
        box = family.interval(s1, s2)
        if not box:
            return ring.zero
        block = a.project(box, check_convex=False)
        return invert(block).entry(s1, s2)

    return LazyMatrix(family, ring, oracle=coord)


# -- the augmented direct limit ------------------------------------------------


class AglElement:
    """Element of aGL: a finite augmentation set S together with a finitary
    invertible body over the base family augmented at S."""

    def __init__(self, base, ring, aug_set, body):
        self.base = base
        self.ring = ring
        self.aug_set = frozenset(aug_set)
        self.body = body

    def augmented_family(self):
        if not self.aug_set:
            return self.base
        return AugmentedFamily(self.base, [self.aug_set])

    def entry(self, s1, s2):
        return self.body.entry(s1, s2)

    def project(self, window, check_convex=True):
        return self.body.project(window, check_convex)

    def __repr__(self):
        return "AglElement(S=%r)" % (sorted(self.aug_set),)


def _family_for(base, ring, aug_set):
    return AugmentedFamily(base, [aug_set]) if aug_set else base


def agl_identity(base, ring):
    return AglElement(base, ring, frozenset(), lazy_identity(base, ring))


def agl_embed(g, bigger_set):
    """j_{S -> S'}: the same entries read over the coarser augmented order.
    Products and inverses commute with this embedding because every entry a
    bigger interval picks up is zero in the smaller body."""
    bigger = frozenset(bigger_set)
    if not g.aug_set <= bigger:
        raise IncompatibleOperands("can only embed into a larger augmentation set")
    fam = _family_for(g.base, g.ring, bigger)
    off, exc, default = g.body.finitary
    body = LazyMatrix(fam, g.ring, finitary=(dict(off), dict(exc), default))
    return AglElement(g.base, g.ring, bigger, body)


def agl_mul(g, h):
    if g.base != h.base or g.ring != h.ring:
        raise IncompatibleOperands("aGL elements over different bases")
    joint = g.aug_set | h.aug_set
    ge, he = agl_embed(g, joint), agl_embed(h, joint)
    return AglElement(g.base, g.ring, joint, lazy_mul(ge.body, he.body))


def agl_invert(g):
    return AglElement(g.base, g.ring, g.aug_set, lazy_invert(g.body))


# -- quasi-Z windows ----------------------------------------------------------------


def qz_window_check(family, ring, window, inner, cap=200000):
    """Verify on finite data that the subgroup generated by units supported on
    sets with N_1-closure inside `window` projects onto the whole unit group
    of the `inner` window.

    Every generator of GL_inner lifts verbatim (identity outside inner), the
    lift is supported on inner with its N_1-closure inside the window, and the
    multiplicative closure of the projected lifts is compared against the full
    unit group of the inner window.
    """
    if not family.has_finite_neighborhoods():
        raise InfiniteNeighborhood("the family has infinite 1-neighborhoods")
    window, inner = list(window), list(inner)
    if not set(inner) <= set(window):
        raise ValueError("inner window must sit inside the outer one")
    for w in (window, inner):
        if not family.is_convex(w):
            raise NotConvex("windows must be convex")
    closure_sites = set()
    for s in inner:
        closure_sites |= set(family.neighborhood(s, 1))
    if not closure_sites <= set(window):
        raise ValueError("N_1-closure of the inner window leaks outside")

    wpro = family.restrict(window)
    ipro = family.restrict(inner)
    lifts = []
    gens = []
    one_w = identity(wpro, ring)
    one_i = identity(ipro, ring)
    for (s1, s2) in ipro.strict_pairs():
        gens.append(one_i.add(unit(ipro, ring, s1, s2)))
        lifts.append(one_w.add(unit(wpro, ring, s1, s2)))
    for s in inner:
        for u in ring.units():
            if u == ring.one:
                continue
            gm = dict(one_i.entries)
            gm[(s, s)] = u
            gens.append(IncMatrix(ipro, ring, gm))
            lm = dict(one_w.entries)
            lm[(s, s)] = u
            lifts.append(IncMatrix(wpro, ring, lm))
    for m in lifts:
        certify(m)  # each lift really is a unit of the window ring
        for t in window:
            if t not in inner and m.entry(t, t) != ring.one:
                raise ValueError("lift leaks outside the generating set")
    projected = [m.project(inner) for m in lifts]
    if projected != gens:
        raise ValueError("projections no longer match the inner generators")
    reached = mulclose(projected, cap=cap)
    full = set(enumerate_invertibles(ipro, ring, cap=cap))
    return {
        "window": sorted(window),
        "inner": sorted(inner),
        "generators_lifted": len(lifts),
        "gl_inner_order": len(full),
        "closure_order": len(reached),
        "surjective": reached == full,
    }


def named_oracle(name, family, ring):
    """Built-in oracles usable from files and the command line."""
    if name == "upper_ones":
        return lazy_from_oracle(
            family, ring, lambda s1, s2: ring.one if family.leq(s1, s2) else ring.zero
        )
    if name == "zig_fence":
        return lazy_from_oracle(
            family,
            ring,
            lambda s1, s2: ring.one if family.leq(s1, s2) else ring.zero,
        )
    raise ValueError("unknown oracle %r" % (name,))
