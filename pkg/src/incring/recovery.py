"""Recovering the underlying poset from ring access alone.

The ring of a finite poset knows its poset: idempotent classes under
"difference is nilpotent" biject with subsets of the elements, the atoms of
the absorption order on classes are the singletons, and products of atom
representatives see exactly the order relation.  Everything here works
through a small access protocol (add, mul, neg, zero, one, is_zero plus
either full enumeration or an idempotent sampler), so the same code runs on
honest matrices and on scrambled structure-constant bundles.
"""

import itertools
import random

from .errors import (
    NotIdempotent,
    NotInDiagonalSupport,
    PosetRequired,
    RingBooleanPartTooLarge,
    SearchBudgetExceeded,
)
from .matrices import IncMatrix, indicator
from .prosets import Proset, elem_key
from .glgroup import random_invertible, invert

__all__ = [
    "is_topologically_nilpotent",
    "b_of",
    "erase",
    "class_equiv",
    "class_leq",
    "MatrixAccess",
    "BundleAccess",
    "scramble",
    "recover_poset",
]


def _coeff_nilpotent(ring, v):
    if not ring.finite:
        return v == ring.zero
    seen = set()
    w = ring.canon(v)
    while w != ring.zero and w not in seen:
        seen.add(w)
        w = ring.mul(w, v)
    return w == ring.zero


def is_topologically_nilpotent(m):
    """True when powers of `m` reach zero.  Decided two ways that must agree:
    the diagonal entries are nilpotent coefficients, and an explicit power
    hits zero."""
    if not m.pro.is_poset():
        raise PosetRequired("nilpotence criterion needs a poset")
    analytic = all(_coeff_nilpotent(m.ring, v) for v in m.diagonal().values())
    n = len(m.pro.elements)
    p = m.power(max(n, 1))
    if m.ring.finite:
        seen = set()
        while not p.is_zero() and p not in seen:
            seen.add(p)
            p = p.mul(p)
        by_power = p.is_zero()
    else:
        # zero diagonal over Z or Q forces strict triangularity, so the
        # |elements|-th power is already conclusive
        by_power = p.is_zero()
    if analytic != by_power:
        raise AssertionError("nilpotence routes disagree on %r" % (m,))
    return analytic


def b_of(e):
    """Diagonal support of an idempotent: the set of elements where the
    diagonal entry is 1.  Only defined over coefficient rings whose only
    idempotents are 0 and 1."""
    if len(e.ring.boolean_part()) > 2:
        raise RingBooleanPartTooLarge(
            "coefficients %r have idempotents besides 0 and 1" % (e.ring.descriptor(),)
        )
    if e.mul(e) != e:
        raise NotIdempotent("matrix is not idempotent")
    out = set()
    for s in e.pro.elements:
        v = e.entry(s, s)
        if v == e.ring.one:
            out.add(s)
        elif v != e.ring.zero:
            raise AssertionError("idempotent with non-boolean diagonal entry")
    return frozenset(out)


def erase(e, sites):
    """Remove `sites` from the diagonal support of an idempotent, one
    E - E.1^{s}.E step per site.  The steps commute, so the site order does
    not matter; each step keeps the matrix idempotent."""
    b = b_of(e)
    sites = sorted(set(sites), key=elem_key)
    for s in sites:
        if s not in b:
            raise NotInDiagonalSupport("%r is not in the diagonal support" % (s,))
    cur = e
    for s in sites:
        ind = indicator(cur.pro, cur.ring, [s])
        cur = cur.sub(cur.mul(ind).mul(cur))
    return cur


def class_equiv(e, f):
    """Idempotents are equivalent when their difference is nilpotent.  Both
    the nilpotence route and the diagonal-support route are computed and must
    agree."""
    by_nilpotence = is_topologically_nilpotent(e.sub(f))
    by_support = b_of(e) == b_of(f)
    if by_nilpotence != by_support:
        raise AssertionError("equivalence routes disagree")
    return by_support


def class_leq(e, f):
    """Absorption order test on idempotent class representatives: the class
    of `e` sits below that of `f` exactly when suitable representatives
    absorb, which on these coefficients is visible on diagonal supports."""
    return b_of(e) <= b_of(f)


# -- access protocol --------------------------------------------------------------


class MatrixAccess:
    """Direct access to a finite matrix ring.  Elements are IncMatrix values."""

    def __init__(self, pro, ring):
        if not pro.is_poset():
            raise PosetRequired("poset recovery needs a poset")
        self.pro = pro
        self.ring = ring
        self.ops = 0

    def add(self, x, y):
        self.ops += 1
        return x.add(y)

    def mul(self, x, y):
        self.ops += 1
        return x.mul(y)

    def neg(self, x):
        self.ops += 1
        return x.neg()

    def zero(self):
        return IncMatrix(self.pro, self.ring, {})

    def one(self):
        return indicator(self.pro, self.ring, self.pro.elements)

    def is_zero(self, x):
        return x.is_zero()

    def elements(self):
        pairs = self.pro.pairs()
        vals = self.ring.elements()
        for combo in itertools.product(vals, repeat=len(pairs)):
            entries = {p: v for p, v in zip(pairs, combo) if v != self.ring.zero}
            yield IncMatrix(self.pro, self.ring, entries)

    def carrier_size(self):
        if not self.ring.finite:
            return None
        return len(self.ring.elements()) ** len(self.pro.pairs())

    def sample_idempotent(self, rng):
        s = rng.choice(self.pro.elements)
        w = random_invertible(self.pro, self.ring, rng)
        return w.mul(indicator(self.pro, self.ring, [s])).mul(invert(w))


class BundleAccess:
    """Access through a structure-constant bundle.  Elements are coefficient
    tuples over an opaque basis; multiplication reads the table."""

    def __init__(self, bundle, ring, sampler=None):
        self.ring = ring
        self.dim = bundle["dim"]
        self.table = [
            [[ring.parse(c) for c in cell] for cell in row] for row in bundle["table"]
        ]
        self._one = tuple(ring.parse(c) for c in bundle["one"])
        self._samples = [tuple(ring.parse(c) for c in v) for v in bundle.get("samples", [])]
        self._sampler = sampler
        self.ops = 0

    def add(self, x, y):
        self.ops += 1
        return tuple(self.ring.add(a, b) for a, b in zip(x, y))

    def neg(self, x):
        self.ops += 1
        return tuple(self.ring.neg(a) for a in x)

    def mul(self, x, y):
        self.ops += 1
        out = [self.ring.zero] * self.dim
        for i, xi in enumerate(x):
            if xi == self.ring.zero:
                continue
            for j, yj in enumerate(y):
                if yj == self.ring.zero:
                    continue
                coeff = self.ring.mul(xi, yj)
                for k, c in enumerate(self.table[i][j]):
                    if c != self.ring.zero:
                        out[k] = self.ring.add(out[k], self.ring.mul(coeff, c))
        return tuple(out)

    def zero(self):
        return tuple([self.ring.zero] * self.dim)

    def one(self):
        return self._one

    def is_zero(self, x):
        return all(a == self.ring.zero for a in x)

    def elements(self):
        vals = self.ring.elements()
        for combo in itertools.product(vals, repeat=self.dim):
            yield tuple(combo)

    def carrier_size(self):
        if not self.ring.finite:
            return None
        return len(self.ring.elements()) ** self.dim

    def sample_idempotent(self, rng):
        if self._sampler is not None:
            return self._sampler(rng)
        if self._samples:
            return self._samples[rng.randrange(len(self._samples))]
        raise SearchBudgetExceeded("bundle carries no idempotent samples")


def _random_unit_triangular(dim, ring, rng):
    m = [[ring.one if i == j else ring.zero for j in range(dim)] for i in range(dim)]
    for i in range(dim):
        for j in range(i + 1, dim):
            m[i][j] = ring.random(rng)
    return m


def _triangular_inverse(m, ring):
    dim = len(m)
    inv = [[ring.one if i == j else ring.zero for j in range(dim)] for i in range(dim)]
    for i in range(dim - 1, -1, -1):
        for j in range(i + 1, dim):
            acc = ring.zero
            for k in range(i + 1, j + 1):
                acc = ring.add(acc, ring.mul(m[i][k], inv[k][j]))
            inv[i][j] = ring.neg(acc)
    return inv


def scramble(pro, ring, seed=0, samples=0):
    """Disguise a matrix ring as a structure-constant bundle over an opaque
    basis.  The basis is a randomly permuted, unit-triangular recombination
    of the order-pair units; the table and the identity's coordinates are all
    the bundle reveals, plus optionally a batch of sampled idempotents for
    witness-mode recovery.  Returns (bundle, access)."""
    if not pro.is_poset():
        raise PosetRequired("poset recovery needs a poset")
    rng = random.Random(seed)
    pairs = pro.pairs()
    dim = len(pairs)
    perm = list(range(dim))
    rng.shuffle(perm)
    where = {perm[i]: i for i in range(dim)}
    t = _random_unit_triangular(dim, ring, rng)
    tinv = _triangular_inverse(t, ring)

    # raw pair units multiply by splicing, so the raw table is 0/1 valued
    idx = {p: i for i, p in enumerate(pairs)}

    def raw_mul(i, j):
        (a, b), (c, d) = pairs[perm[i]], pairs[perm[j]]
        if b != c:
            return None
        return where[idx[(a, d)]]

    def to_basis(raw_vec):
        # raw coordinates v over permuted units; basis coords w solve w.T = v
        out = []
        for k in range(dim):
            acc = ring.zero
            for i in range(dim):
                if raw_vec[i] != ring.zero:
                    acc = ring.add(acc, ring.mul(raw_vec[i], tinv[i][k]))
            out.append(acc)
        return tuple(out)

    table = []
    for i in range(dim):
        row = []
        for j in range(dim):
            raw = [ring.zero] * dim
            for k in range(dim):
                if t[i][k] == ring.zero:
                    continue
                for l in range(dim):
                    if t[j][l] == ring.zero:
                        continue
                    m = raw_mul(k, l)
                    if m is not None:
                        raw[m] = ring.add(raw[m], ring.mul(t[i][k], t[j][l]))
            row.append([ring.format(c) for c in to_basis(raw)])
        table.append(row)

    def matrix_to_coords(m):
        raw = [ring.zero] * dim
        for (a, b), v in m.entries.items():
            raw[where[idx[(a, b)]]] = v
        return to_basis(raw)

    one = indicator(pro, ring, pro.elements)
    bundle = {
        "ring": ring.descriptor()["ring"],
        "dim": dim,
        "table": table,
        "one": [ring.format(c) for c in matrix_to_coords(one)],
    }

    def sampler(r):
        s = r.choice(pro.elements)
        w = random_invertible(pro, ring, r)
        return matrix_to_coords(w.mul(indicator(pro, ring, [s])).mul(invert(w)))

    if samples:
        srng = random.Random(seed + 1)
        bundle["samples"] = [
            [ring.format(c) for c in sampler(srng)] for _ in range(samples)
        ]
    return bundle, BundleAccess(bundle, ring, sampler=sampler)


# -- the recovery procedure ---------------------------------------------------------


def _access_nilpotent(access, x, cap=24):
    """Black-box nilpotence by repeated squaring with cycle detection."""
    seen = set()
    cur = x
    for _ in range(cap):
        if access.is_zero(cur):
            return True
        if cur in seen:
            return False
        seen.add(cur)
        cur = access.mul(cur, cur)
    return access.is_zero(cur)


def _is_idempotent(access, x):
    return access.mul(x, x) == x


def _difference(access, x, y):
    return access.add(x, access.neg(y))


def _split_classes(access, idems):
    classes = []
    for e in idems:
        for cls in classes:
            if _access_nilpotent(access, _difference(access, e, cls[0])):
                cls.append(e)
                break
        else:
            classes.append([e])
    return classes


def _atoms(access, classes):
    """Minimal nonzero classes of the absorption order, found by searching
    representative pairs for E.F = F.E = E."""
    nonzero = [c for c in classes if not access.is_zero(c[0])]

    def below(c1, c2):
        for e in c1:
            for f in c2:
                if access.mul(e, f) == e and access.mul(f, e) == e:
                    return True
        return False

    out = []
    for c in nonzero:
        minimal = True
        for other in nonzero:
            if other is c:
                continue
            if below(other, c):
                minimal = False
                break
        if minimal:
            out.append(c)
    return out


def _edges(access, atoms):
    rel = []
    for i, c1 in enumerate(atoms):
        for j, c2 in enumerate(atoms):
            if i == j:
                continue
            if any(
                not access.is_zero(access.mul(e, f)) for e in c1 for f in c2
            ):
                rel.append((i, j))
    return rel


def recover_poset(access, mode="auto", budget=10**5, rng=None, stall=60, keep=12):
    """Reconstruct the poset from ring access alone.

    `exhaustive` enumerates every ring element, keeps the idempotents, splits
    them into difference-nilpotent classes, finds the atoms of the absorption
    order, and reads the order off atom products.  `witness` draws sampled
    idempotents (which land in minimal classes), buckets them the same way,
    and stops once no new class has shown up for `stall` consecutive draws.
    Returns a Proset on fresh integer labels, correct up to isomorphism.
    """
    size = access.carrier_size()
    if mode == "auto":
        mode = "exhaustive" if size is not None and size <= 2**14 else "witness"
    if mode == "exhaustive":
        if size is None or size > 2**14:
            raise SearchBudgetExceeded(
                "carrier too large to enumerate (%s elements)" % (size,)
            )
        idems = [x for x in access.elements() if _is_idempotent(access, x)]
        classes = _split_classes(access, idems)
        atoms = _atoms(access, classes)
    elif mode == "witness":
        if rng is None:
            rng = random.Random(0)
        classes = []
        quiet = 0
        while quiet < stall:
            if access.ops > budget:
                raise SearchBudgetExceeded(
                    "no stable class structure within %d ring operations" % budget
                )
            e = access.sample_idempotent(rng)
            placed = False
            for cls in classes:
                if _access_nilpotent(access, _difference(access, e, cls[0])):
                    if len(cls) < keep:
                        cls.append(e)
                    placed = True
                    break
            if placed:
                quiet += 1
            else:
                classes.append([e])
                quiet = 0
        atoms = [c for c in classes if not access.is_zero(c[0])]
    else:
        raise ValueError("mode must be auto, exhaustive, or witness")

    rel = _edges(access, atoms)
    return Proset(range(len(atoms)), rel)
