"""Sparse matrices supported on the order relation of a finite proset.

Entries live in a CoeffRing; only nonzero entries are stored, and the support
invariant (a key (s1, s2) implies s1 <= s2) is enforced at construction.  With
that invariant, multiplying stored entries of A against stored entries of B
realizes the interval convolution

    (A*B)[s1, s2] = sum over t in [s1, s2] of A[s1, t] * B[t, s2]

exactly: transitivity makes the interval membership test implicit.
"""

from .errors import IncompatibleOperands, NotComparable, NotConvex
from .prosets import elem_key

__all__ = [
    "IncMatrix",
    "zero",
    "identity",
    "scalar_diag",
    "indicator",
    "unit",
    "IntervalIdeal",
    "ConvexIdeal",
    "LocallyConvexIdeal",
    "CoeffIdeal",
    "SumIdeal",
    "ideal_membership",
    "region_pairs",
]


class IncMatrix:
    __slots__ = ("pro", "ring", "entries")

    def __init__(self, pro, ring, entries):
        self.pro = pro
        self.ring = ring
        clean = {}
        for (s1, s2), v in entries.items():
            v = ring.canon(v)
            if v == ring.zero:
                continue
            if not pro.leq(s1, s2):
                raise NotComparable("entry at (%r, %r) is off the order" % (s1, s2))
            clean[(s1, s2)] = v
        self.entries = clean

    # -- access -----------------------------------------------------------

    def entry(self, s1, s2):
        return self.entries.get((s1, s2), self.ring.zero)

    def support(self):
        return sorted(self.entries, key=lambda p: (elem_key(p[0]), elem_key(p[1])))

    def diagonal(self):
        return {s: self.entry(s, s) for s in self.pro.elements}

    def is_zero(self):
        return not self.entries

    def _compatible(self, other):
        if self.pro != other.pro or self.ring != other.ring:
            raise IncompatibleOperands("operands live over different rings")

    # -- arithmetic ---------------------------------------------------------

    def add(self, other):
        self._compatible(other)
        ring = self.ring
        out = dict(self.entries)
        for k, v in other.entries.items():
            w = ring.add(out.get(k, ring.zero), v)
            if w == ring.zero:
                out.pop(k, None)
            else:
                out[k] = w
        return self._wrap(out)

    def neg(self):
        ring = self.ring
        return self._wrap({k: ring.neg(v) for k, v in self.entries.items()})

    def sub(self, other):
        return self.add(other.neg())

    def mul(self, other):
        self._compatible(other)
        ring = self.ring
        rows = {}
        for (t, s2), b in other.entries.items():
            rows.setdefault(t, []).append((s2, b))
        out = {}
        for (s1, t), a in self.entries.items():
            for s2, b in rows.get(t, ()):
                k = (s1, s2)
                w = ring.add(out.get(k, ring.zero), ring.mul(a, b))
                if w == ring.zero:
                    out.pop(k, None)
                else:
                    out[k] = w
        return self._wrap(out)

    def scalar_mul(self, p):
        ring = self.ring
        p = ring.canon(p)
        return self._wrap({k: ring.mul(p, v) for k, v in self.entries.items()})

    def power(self, n):
        if n < 0:
            raise ValueError("negative powers go through glgroup.invert")
        acc = identity(self.pro, self.ring)
        base = self
        while n:
            if n & 1:
                acc = acc.mul(base)
            base = base.mul(base)
            n >>= 1
        return acc

    def transpose(self):
        """Same entries over the opposite proset."""
        opp = self.pro.opposite()
        return IncMatrix(opp, self.ring, {(b, a): v for (a, b), v in self.entries.items()})

    def _wrap(self, entries):
        m = object.__new__(IncMatrix)
        m.pro = self.pro
        m.ring = self.ring
        m.entries = {k: v for k, v in entries.items() if v != self.ring.zero}
        return m

    # -- restriction -----------------------------------------------------------

    def project(self, subset, check_convex=True):
        """Restrict to the induced subproset; a surjective unital ring map
        when the subset is convex (its kernel is the ideal of that subset)."""
        subset = set(subset)
        if check_convex and not self.pro.is_convex(subset):
            raise NotConvex("projection window %r is not convex" % (sorted(subset, key=elem_key),))
        sub = self.pro.restrict(subset)
        kept = {
            k: v for k, v in self.entries.items() if k[0] in subset and k[1] in subset
        }
        return IncMatrix(sub, self.ring, kept)

    def split_components(self):
        """One matrix per component of the proset; their direct sum is A."""
        return [self.project(c, check_convex=False) for c in self.pro.components()]

    # -- comparison ---------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, IncMatrix)
            and self.pro == other.pro
            and self.ring == other.ring
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((len(self.pro.elements), frozenset(self.entries.items())))

    def __repr__(self):
        cells = ", ".join(
            "(%r,%r)=%s" % (a, b, self.ring.format(v))
            for (a, b), v in sorted(
                self.entries.items(), key=lambda kv: (elem_key(kv[0][0]), elem_key(kv[0][1]))
            )
        )
        return "IncMatrix{%s}" % cells


def zero(pro, ring):
    return IncMatrix(pro, ring, {})


def identity(pro, ring):
    return IncMatrix(pro, ring, {(s, s): ring.one for s in pro.elements})


def scalar_diag(pro, ring, p):
    """p^Lambda: the scalar p down the whole diagonal.  Central."""
    return IncMatrix(pro, ring, {(s, s): p for s in pro.elements})


def indicator(pro, ring, subset):
    """1^S: ones on the diagonal of S.  indicator(all elements) is the identity."""
    subset = set(subset)
    for s in subset:
        if s not in pro:
            raise ValueError("%r is not an element" % (s,))
    return IncMatrix(pro, ring, {(s, s): ring.one for s in subset})


def unit(pro, ring, s1, s2, value=None):
    """e^(s1,s2): single entry at a comparable pair, 1 unless `value` is
    given; e^(s,s) == 1^{s}."""
    if not pro.leq(s1, s2):
        raise NotComparable("(%r, %r) is not an order pair" % (s1, s2))
    return IncMatrix(pro, ring, {(s1, s2): ring.one if value is None else value})


def join_components(pieces, pro, ring):
    """Direct sum of matrices over the components of `pro`."""
    entries = {}
    for piece in pieces:
        entries.update(piece.entries)
    return IncMatrix(pro, ring, entries)


# ---------------------------------------------------------------------------
# Ideals cut out by vanishing and coefficient conditions
# ---------------------------------------------------------------------------


class IntervalIdeal:
    """I_[s1,s2]: matrices vanishing on every pair inside the interval."""

    def __init__(self, s1, s2):
        self.s1, self.s2 = s1, s2

    def region(self, pro):
        box = pro.interval(self.s1, self.s2)
        if not box:
            raise NotComparable("[%r, %r] is empty" % (self.s1, self.s2))
        return {(a, b) for a in box for b in box if pro.leq(a, b)}

    def constraint(self):
        return "zero"


class ConvexIdeal:
    """I_{Lambda'}: matrices vanishing on every pair within a convex subset."""

    def __init__(self, subset):
        self.subset = frozenset(subset)

    def region(self, pro):
        if not pro.is_convex(self.subset):
            raise NotConvex("ideal subset is not convex")
        return {(a, b) for a in self.subset for b in self.subset if pro.leq(a, b)}

    def constraint(self):
        return "zero"


class LocallyConvexIdeal:
    """I_{{Lambda_i}} for a locally convex collection: disjoint convex subsets
    with no comparabilities across distinct members."""

    def __init__(self, subsets):
        self.subsets = tuple(frozenset(s) for s in subsets)

    def region(self, pro):
        for s in self.subsets:
            if not pro.is_convex(s):
                raise NotConvex("collection member is not convex")
        for i, a in enumerate(self.subsets):
            for b in self.subsets[i + 1:]:
                if a & b:
                    raise NotConvex("collection members overlap")
                for x in a:
                    for y in b:
                        if pro.leq(x, y) or pro.leq(y, x):
                            raise NotConvex("collection members are comparable")
        out = set()
        for s in self.subsets:
            out |= {(a, b) for a in s for b in s if pro.leq(a, b)}
        return out

    def constraint(self):
        return "zero"


class CoeffIdeal:
    """M_Lambda(J): every entry lies in the coefficient ideal J."""

    def __init__(self, member, label="J"):
        self.member = member
        self.label = label

    def region(self, pro):
        return set(pro.pairs())

    def constraint(self):
        return "coeff"


class SumIdeal:
    """Sum of ideals; membership is the per-coordinate sum of constraints."""

    def __init__(self, parts):
        self.parts = tuple(parts)


def region_pairs(pro, ideal):
    return ideal.region(pro)


def ideal_membership(matrix, ideal):
    """Whether the matrix lies in the ideal described by `ideal`.

    Every primitive ideal is a per-coordinate condition: zero on a region for
    the vanishing ideals, membership in J everywhere for a coefficient ideal.
    A sum of such ideals is again per-coordinate, and the allowed set at a
    coordinate is the largest one contributed ({0} < J < whole ring), so
    membership in sums reduces to taking a coordinatewise maximum.
    """
    pro = matrix.pro
    parts = ideal.parts if isinstance(ideal, SumIdeal) else (ideal,)
    coeff_parts = [p for p in parts if p.constraint() == "coeff"]
    if len(coeff_parts) > 1:
        raise ValueError("at most one coefficient ideal per sum")
    coeff = coeff_parts[0] if coeff_parts else None
    # level per coordinate: 0 must vanish, 1 must lie in J, 2 unconstrained
    levels = {}
    for part in parts:
        if part.constraint() == "coeff":
            lvl = 1
        else:
            lvl = 0
        reg = part.region(pro)
        for pair in pro.pairs():
            here = lvl if (pair in reg or lvl == 1) else 2
            levels[pair] = max(levels.get(pair, -1), here)
    zero_val = matrix.ring.zero
    for pair, lvl in levels.items():
        v = matrix.entry(*pair)
        if lvl == 0 and v != zero_val:
            return False
        if lvl == 1 and v != zero_val and not coeff.member(v):
            return False
    return True
