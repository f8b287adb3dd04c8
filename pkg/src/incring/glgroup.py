"""Units of an incidence ring: certification, inversion, centrality, commutators.

A matrix is invertible exactly when every class-diagonal block (the dense
square block of an equivalence class) has unit determinant; the inverse is
assembled by block back-substitution along a deterministic linear extension
of the class order.  Determinants and adjugates are computed division-free,
so everything works over Z and Z/n as well as over fields.
"""

from dataclasses import dataclass

from .errors import HypothesisViolation, NotInvertible
from .matrices import IncMatrix, identity, unit
from .prosets import Proset, elem_key, two_block
from .rings import PrimeField

__all__ = [
    "GroupElement",
    "certify",
    "is_invertible",
    "invert",
    "det_block",
    "class_extension",
    "normal_subgroup_membership",
    "quotient_project",
    "is_central",
    "CentralityReport",
    "is_scalar_unit",
    "centrality_generators",
    "commutator",
    "iterated_commutator_sample",
    "random_invertible",
    "enumerate_matrices",
    "enumerate_invertibles",
    "mulclose",
    "dickson_normal_closure",
    "transpose_op_iso",
]


# -- dense helpers on class blocks ------------------------------------------


def _mat_mul(ring, x, y):
    n, m, k = len(x), len(y[0]) if y else 0, len(y)
    out = [[ring.zero] * m for _ in range(n)]
    for i in range(n):
        xi = x[i]
        for t in range(k):
            a = xi[t]
            if a == ring.zero:
                continue
            yt = y[t]
            oi = out[i]
            for j in range(m):
                oi[j] = ring.add(oi[j], ring.mul(a, yt[j]))
    return out


def _mat_add(ring, x, y):
    return [[ring.add(a, b) for a, b in zip(rx, ry)] for rx, ry in zip(x, y)]


def _mat_neg(ring, x):
    return [[ring.neg(a) for a in row] for row in x]


def det_block(ring, m):
    """Division-free determinant by first-row expansion with memo on columns."""
    n = len(m)
    if n == 0:
        return ring.one
    memo = {}

    def rec(cols):
        if len(cols) == 1:
            return m[n - 1][cols[0]]
        got = memo.get(cols)
        if got is not None:
            return got
        row = n - len(cols)
        acc = ring.zero
        for idx, c in enumerate(cols):
            a = m[row][c]
            if a == ring.zero:
                continue
            sub = cols[:idx] + cols[idx + 1:]
            term = ring.mul(a, rec(sub))
            acc = ring.add(acc, term if idx % 2 == 0 else ring.neg(term))
        memo[cols] = acc
        return acc

    return rec(tuple(range(n)))


def _adjugate(ring, m):
    n = len(m)
    if n == 1:
        return [[ring.one]]
    adj = [[ring.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [m[r][c] for c in range(n) if c != j]
                for r in range(n)
                if r != i
            ]
            cof = det_block(ring, minor)
            adj[j][i] = cof if (i + j) % 2 == 0 else ring.neg(cof)
    return adj


def _block_inverse(ring, m):
    d = det_block(ring, m)
    if not ring.is_unit(d):
        raise NotInvertible("block determinant %s is not a unit" % ring.format(d))
    dinv = ring.inv(d)
    adj = _adjugate(ring, m)
    return [[ring.mul(dinv, a) for a in row] for row in adj]


# -- class bookkeeping ---------------------------------------------------------


def class_extension(pro):
    """Linear extension of the equivalence classes, canonical tie-break."""
    classes = [tuple(sorted(c, key=elem_key)) for c in pro.classes()]
    remaining = set(range(len(classes)))
    below = {
        i: {
            j
            for j in range(len(classes))
            if j != i and pro.leq(classes[j][0], classes[i][0])
        }
        for i in range(len(classes))
    }
    order = []
    while remaining:
        ready = [i for i in remaining if not (below[i] & remaining)]
        pick = min(ready, key=lambda i: elem_key(classes[i][0]))
        order.append(pick)
        remaining.discard(pick)
    return [classes[i] for i in order]


def _get_block(matrix, rows, cols):
    ring = matrix.ring
    return [[matrix.entry(a, b) for b in cols] for a in rows]


def is_invertible(matrix):
    """Unit test: every class-diagonal block has unit determinant."""
    ring = matrix.ring
    for c in matrix.pro.classes():
        rows = tuple(sorted(c, key=elem_key))
        d = det_block(ring, _get_block(matrix, rows, rows))
        if not ring.is_unit(d):
            return False
    return True


def invert(matrix):
    """Two-sided inverse inside the same incidence ring.

    Diagonal class blocks invert by adjugate over determinant; blocks between
    classes c1 < c2 follow the back-substitution

        B[c1, c2] = -B[c1, c1] * sum over c1 < c <= c2 of A[c1, c] * B[c, c2].
    """
    pro, ring = matrix.pro, matrix.ring
    ext = class_extension(pro)
    k = len(ext)
    inv_blocks = {}
    for i, c in enumerate(ext):
        try:
            inv_blocks[(i, i)] = _block_inverse(ring, _get_block(matrix, c, c))
        except NotInvertible:
            raise NotInvertible(
                "class block %r has non-unit determinant" % (c,)
            )
    cleq = {
        (i, j): pro.leq(ext[i][0], ext[j][0])
        for i in range(k)
        for j in range(k)
    }
    for span in range(1, k):
        for i in range(k - span):
            j = i + span
            if not cleq[(i, j)]:
                continue
            acc = None
            for l in range(i + 1, j + 1):
                if not (cleq[(i, l)] and cleq[(l, j)]):
                    continue
                blk = inv_blocks.get((l, j))
                if blk is None:
                    continue
                term = _mat_mul(ring, _get_block(matrix, ext[i], ext[l]), blk)
                acc = term if acc is None else _mat_add(ring, acc, term)
            if acc is None:
                continue
            inv_blocks[(i, j)] = _mat_mul(ring, inv_blocks[(i, i)], _mat_neg(ring, acc))
    entries = {}
    for (i, j), blk in inv_blocks.items():
        for a, row in zip(ext[i], blk):
            for b, v in zip(ext[j], row):
                if v != ring.zero:
                    entries[(a, b)] = v
    return IncMatrix(pro, ring, entries)


# -- the group -------------------------------------------------------------------


class GroupElement:
    """An invertible incidence matrix with its inverse cached."""

    __slots__ = ("matrix", "_inverse")

    def __init__(self, matrix, inverse=None):
        self.matrix = matrix
        self._inverse = inverse

    @property
    def inverse_matrix(self):
        if self._inverse is None:
            self._inverse = invert(self.matrix)
        return self._inverse

    def inv(self):
        return GroupElement(self.inverse_matrix, self.matrix)

    def mul(self, other):
        return GroupElement(self.matrix.mul(other.matrix))

    def conj(self, other):
        """self * other * self^-1"""
        return GroupElement(self.matrix.mul(other.matrix).mul(self.inverse_matrix))

    def power(self, n):
        if n >= 0:
            return GroupElement(self.matrix.power(n))
        return GroupElement(self.inverse_matrix.power(-n))

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return "GroupElement(%r)" % (self.matrix,)


def certify(matrix):
    """Build a GroupElement, proving invertibility by computing the inverse
    and checking both products against the identity."""
    inv = invert(matrix)
    one = identity(matrix.pro, matrix.ring)
    if matrix.mul(inv) != one or inv.mul(matrix) != one:
        raise NotInvertible("inverse certification failed")
    return GroupElement(matrix, inv)


def commutator(g, h):
    """[g, h] = g h g^-1 h^-1"""
    m = g.matrix.mul(h.matrix).mul(g.inverse_matrix).mul(h.inverse_matrix)
    return GroupElement(m)


# -- normal subgroups cut out by congruence regions ------------------------------


def normal_subgroup_membership(g, ideal):
    """Identity pattern on the region of an interval / convex / locally convex
    ideal: diagonal ones and vanishing strict entries inside the region."""
    matrix = g.matrix if isinstance(g, GroupElement) else g
    ring = matrix.ring
    for (a, b) in ideal.region(matrix.pro):
        v = matrix.entry(a, b)
        if a == b:
            if v != ring.one:
                return False
        elif v != ring.zero:
            return False
    return True


def quotient_project(g, subset):
    """Project an invertible matrix to a convex window and recertify; the
    kernel of this group map is the normal subgroup of the window."""
    matrix = g.matrix if isinstance(g, GroupElement) else g
    return certify(matrix.project(subset))


# -- center ------------------------------------------------------------------------


def is_scalar_unit(matrix):
    ring = matrix.ring
    vals = set()
    for s in matrix.pro.elements:
        vals.add(matrix.entry(s, s))
    if len(vals) != 1 or not ring.is_unit(next(iter(vals))):
        return False
    return all(a == b for (a, b) in matrix.entries)


def _unit_sample(ring):
    if ring.finite:
        return list(ring.units())
    if ring.name == "Z":
        return [-1]
    return [ring.canon(2)]


def centrality_generators(pro, ring):
    """A generating set of the unit group: all elementary transvections
    1 + e^(s1,s2) over comparable pairs plus single-site diagonal units."""
    gens = []
    one = identity(pro, ring)
    for (s1, s2) in pro.strict_pairs():
        gens.append(one.add(unit(pro, ring, s1, s2)))
    for s in pro.elements:
        for u in _unit_sample(ring):
            if u == ring.one:
                continue
            m = dict(one.entries)
            m[(s, s)] = u
            gens.append(IncMatrix(pro, ring, m))
    return gens


@dataclass
class CentralityReport:
    central: bool
    scalar_test: bool
    hypothesis_ok: bool
    agree: bool


def is_central(g):
    """Exact centrality (commutation against a generating set) side by side
    with the scalar-matrix test.  The two agree whenever the proset is
    irreducible and the ring has a unit pair; when that hypothesis fails the
    exact answer is authoritative and the report says so."""
    matrix = g.matrix if isinstance(g, GroupElement) else g
    pro, ring = matrix.pro, matrix.ring
    central = all(
        matrix.mul(h) == h.mul(matrix) for h in centrality_generators(pro, ring)
    )
    scalar = is_scalar_unit(matrix)
    hypothesis = pro.is_irreducible() and ring.has_unit_pair()
    return CentralityReport(
        central=central,
        scalar_test=scalar,
        hypothesis_ok=hypothesis,
        agree=central == scalar,
    )


# -- sampling and enumeration --------------------------------------------------------


def random_invertible(pro, ring, rng):
    """Random unit: per class, a product L*D*U with unit diagonal D, plus
    arbitrary entries between distinct comparable classes."""
    entries = {}
    units = _unit_sample(ring)
    if ring.one not in units:
        units = units + [ring.one]
    for c in pro.classes():
        rows = tuple(sorted(c, key=elem_key))
        n = len(rows)
        low = [[ring.one if i == j else (ring.random(rng) if i > j else ring.zero) for j in range(n)] for i in range(n)]
        up = [[ring.one if i == j else (ring.random(rng) if i < j else ring.zero) for j in range(n)] for i in range(n)]
        diag = [[rng.choice(units) if i == j else ring.zero for j in range(n)] for i in range(n)]
        blk = _mat_mul(ring, _mat_mul(ring, low, diag), up)
        for a, row in zip(rows, blk):
            for b, v in zip(rows, row):
                if v != ring.zero:
                    entries[(a, b)] = v
    for (s1, s2) in pro.strict_pairs():
        if s2 in pro.equiv_class(s1):
            continue
        v = ring.random(rng)
        if v != ring.zero:
            entries[(s1, s2)] = v
    return IncMatrix(pro, ring, entries)


def enumerate_matrices(pro, ring):
    """Every matrix of the incidence ring (finite ring only)."""
    pairs = pro.pairs()
    values = list(ring.elements())

    def rec(i, acc):
        if i == len(pairs):
            yield IncMatrix(pro, ring, dict(acc))
            return
        for v in values:
            if v != ring.zero:
                acc[pairs[i]] = v
            yield from rec(i + 1, acc)
            acc.pop(pairs[i], None)

    yield from rec(0, {})


def enumerate_invertibles(pro, ring, cap=None):
    out = []
    for m in enumerate_matrices(pro, ring):
        if is_invertible(m):
            out.append(m)
            if cap is not None and len(out) > cap:
                raise ValueError("more than %d invertibles" % cap)
    return out


def mulclose(mats, cap=None):
    """Closure of a set of matrices under multiplication."""
    done = set(mats)
    frontier = list(done)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(done):
                for c in (a.mul(b), b.mul(a)):
                    if c not in done:
                        done.add(c)
                        fresh.append(c)
                        if cap is not None and len(done) > cap:
                            raise ValueError("closure exceeded %d elements" % cap)
        frontier = fresh
    return done


# -- commutator sampling -----------------------------------------------------------


def iterated_commutator_sample(pro, ring, depth, samples, rng):
    """Sample depth-k iterated commutators and check the vanishing pattern:
    on every interval with at most `depth` elements the entries agree with
    the identity.  Returns a small report dict."""
    checked = violations = 0
    small = [
        (s1, s2)
        for (s1, s2) in pro.pairs()
        if len(pro.interval(s1, s2)) <= depth
    ]

    def deep(k):
        if k == 0:
            return GroupElement(random_invertible(pro, ring, rng))
        return commutator(deep(k - 1), deep(k - 1))

    for _ in range(samples):
        c = deep(depth).matrix
        for (s1, s2) in small:
            checked += 1
            want = ring.one if s1 == s2 else ring.zero
            if c.entry(s1, s2) != want:
                violations += 1
    return {
        "depth": depth,
        "samples": samples,
        "checked": checked,
        "violations": violations,
    }


# -- Dickson closure and the opposite-order isomorphism ------------------------------


def dickson_normal_closure(n, q, rng, max_rounds=64):
    """Normal closure of a noncentral element of GL_n(F_q) on the full block.

    Needs n >= 2, and |F| > 3 when n == 2.  The closure is grown by
    conjugating with group generators and closing under products; the report
    records its order and whether the standard SL_n generating pair landed
    inside.
    """
    if n < 2:
        raise HypothesisViolation("need n >= 2")
    if n == 2 and q <= 3:
        raise HypothesisViolation("n == 2 needs |F| > 3")
    ring = PrimeField(q)
    pro = two_block(n)
    labels = ["t%d" % i for i in range(n)]
    gens = centrality_generators(pro, ring)
    gens = [certify(g) for g in gens]
    # noncentral seed: a random unit that fails the scalar test
    while True:
        seed = random_invertible(pro, ring, rng)
        if not is_scalar_unit(seed):
            break
    orbit = {seed}
    frontier = [seed]
    rounds = 0
    while frontier and rounds < max_rounds:
        rounds += 1
        fresh = []
        for x in frontier:
            gx = GroupElement(x)
            for g in gens:
                y = g.conj(gx).matrix
                if y not in orbit:
                    orbit.add(y)
                    fresh.append(y)
        frontier = fresh
    closure = mulclose(orbit)
    sl_pair = [
        identity(pro, ring).add(unit(pro, ring, labels[0], labels[1])),
        identity(pro, ring).add(unit(pro, ring, labels[1], labels[0])),
    ]
    sl_order = 1
    for i in range(1, n + 1):
        sl_order *= q**n - q ** (n - i)
    sl_order //= q - 1
    return {
        "n": n,
        "q": q,
        "seed": seed,
        "closure_order": len(closure),
        "contains_sl_generators": all(m in closure for m in sl_pair),
        "sl_order": sl_order,
        "order_divisible_by_sl": len(closure) % sl_order == 0,
    }


def transpose_op_iso(g):
    """The anti-automorphism-fixing isomorphism onto the opposite order:
    A maps to the transpose of its inverse, an element over Lambda^op."""
    elt = g if isinstance(g, GroupElement) else certify(g)
    return GroupElement(elt.inverse_matrix.transpose())
