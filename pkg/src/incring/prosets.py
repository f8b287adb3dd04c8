"""Locally finite preordered sets: finite prosets and built-in infinite families.

A Proset is a finite reflexive-transitive relation given by generating pairs;
the constructor closes them.  Families (N, Z, Zig, divisibility on N*, augmented
and custom ones) answer the same queries (leq, interval, equiv_class, windows)
without materializing the carrier.

Orientation conventions used throughout:
  * Zig places even integers below their odd neighbors, 2k <= 2k+1 and
    2k <= 2k-1, so interval(2, 3) == (2, 3).
  * two_block(m, n) has an n-element bottom class under an m-element top class;
    n == 0 degenerates to the single full-equivalence block on m elements.
"""

from itertools import combinations, islice
from math import lcm

from .errors import (
    InfiniteNeighborhood,
    LocalFinitenessBudgetExceeded,
    NotConnected,
    NotConvex,
    OverlappingAugmentation,
)

__all__ = [
    "Proset",
    "ProsetFamily",
    "NFamily",
    "ZFamily",
    "ZigFamily",
    "NStarDivFamily",
    "AugmentedFamily",
    "CustomFamily",
    "two_block",
    "elem_key",
    "interval_closure",
]

DEFAULT_BUDGET = 10**6


def elem_key(x):
    """Total sort key over the mixed hashables we use as element labels."""
    if isinstance(x, bool):
        return ("bool", (x,))
    if isinstance(x, int):
        return ("int", (x,))
    if isinstance(x, str):
        return ("str", (x,))
    if isinstance(x, tuple):
        return ("tuple", tuple(elem_key(y) for y in x))
    if isinstance(x, frozenset):
        return ("set", tuple(sorted(elem_key(y) for y in x)))
    return (type(x).__name__, (str(x),))


def _sorted(xs):
    return tuple(sorted(xs, key=elem_key))


class Proset:
    """Finite preordered set.  Immutable after construction."""

    def __init__(self, elements, relations=()):
        self.elements = _sorted(set(elements))
        index = set(self.elements)
        up = {s: {s} for s in self.elements}
        adj = {s: set() for s in self.elements}
        for a, b in relations:
            if a not in index or b not in index:
                raise ValueError("relation (%r, %r) uses unknown elements" % (a, b))
            adj[a].add(b)
        # transitive closure by forward search from every element
        for s in self.elements:
            stack = list(adj[s])
            seen = up[s]
            while stack:
                t = stack.pop()
                if t not in seen:
                    seen.add(t)
                    stack.extend(adj[t])
        self._up = {s: frozenset(ts) for s, ts in up.items()}
        down = {s: set() for s in self.elements}
        for s in self.elements:
            for t in self._up[s]:
                down[t].add(s)
        self._down = {s: frozenset(ts) for s, ts in down.items()}

    # -- basic relation ----------------------------------------------------

    def __contains__(self, s):
        return s in self._up

    def __len__(self):
        return len(self.elements)

    def leq(self, s1, s2):
        return s2 in self._up[s1]

    def up_set(self, s):
        return self._up[s]

    def down_set(self, s):
        return self._down[s]

    def interval(self, s1, s2):
        """[s1, s2] = every t with s1 <= t <= s2; empty unless s1 <= s2."""
        if s2 not in self._up[s1]:
            return ()
        return _sorted(t for t in self._up[s1] if s2 in self._up[t])

    def equiv_class(self, s):
        return frozenset(t for t in self._up[s] if s in self._up[t])

    def neighborhood(self, s, n):
        """N_n(s); N_0 is the equivalence class, N_1 adds all comparables."""
        if n == 0:
            return self.equiv_class(s)
        reached = set(self.equiv_class(s))
        for _ in range(n):
            grown = set(reached)
            for t in reached:
                grown |= self._up[t]
                grown |= self._down[t]
            if grown == reached:
                break
            reached = grown
        return frozenset(reached)

    def pairs(self):
        """All order pairs (s1, s2) with s1 <= s2, diagonal included."""
        return tuple(
            (s1, s2) for s1 in self.elements for s2 in _sorted(self._up[s1])
        )

    def strict_pairs(self):
        return tuple((a, b) for a, b in self.pairs() if a != b)

    # -- classes and components ---------------------------------------------

    def classes(self):
        """Equivalence classes N_0, canonically ordered."""
        seen = set()
        out = []
        for s in self.elements:
            if s not in seen:
                c = self.equiv_class(s)
                seen |= c
                out.append(c)
        return out

    def class_leq(self, c1, c2):
        return self.leq(next(iter(c1)), next(iter(c2)))

    def components(self):
        """Connected components of the comparability graph, as frozensets."""
        seen = set()
        out = []
        for s in self.elements:
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                t = stack.pop()
                for u in self._up[t] | self._down[t]:
                    if u not in comp:
                        comp.add(u)
                        stack.append(u)
            seen |= comp
            out.append(frozenset(comp))
        return sorted(out, key=lambda c: elem_key(min(c, key=elem_key)))

    def restrict(self, subset):
        """Induced subproset on the given elements."""
        subset = set(subset)
        missing = subset - set(self.elements)
        if missing:
            raise ValueError("elements %r not in proset" % (_sorted(missing),))
        rel = [
            (a, b)
            for a in subset
            for b in self._up[a]
            if b in subset
        ]
        return Proset(subset, rel)

    # -- convexity -----------------------------------------------------------

    def is_convex(self, subset):
        """Closed under intervals and connected inside the subset."""
        subset = set(subset)
        if not subset:
            return True
        for a in subset:
            for b in subset:
                if self.leq(a, b) and not set(self.interval(a, b)) <= subset:
                    return False
        return self._connected_within(subset)

    def _connected_within(self, subset):
        start = next(iter(subset))
        comp = {start}
        stack = [start]
        while stack:
            t = stack.pop()
            for u in (self._up[t] | self._down[t]) & subset:
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        return comp == subset

    def convex_closure(self, subset):
        """Smallest convex superset; the subset must sit in one component.

        Interval closure is a single pass over comparable pairs.  If the
        closure is still disconnected, shortest connecting paths are added in
        canonical order and the closure rerun, so the choice is deterministic.
        """
        subset = set(subset)
        if not subset:
            return frozenset()
        comps = [c for c in self.components() if c & subset]
        if len(comps) > 1:
            raise NotConnected("subset spans %d components" % len(comps))
        work = set(subset)
        while True:
            closed = set(work)
            for a in work:
                for b in work:
                    if self.leq(a, b):
                        closed |= set(self.interval(a, b))
            work = closed
            if self._connected_within(work):
                return frozenset(work)
            work |= self._connecting_path(work)

    def _connecting_path(self, subset):
        # BFS from one piece of the subset through the ambient comparability
        # graph until another piece is reached; ties broken canonically.
        start = min(subset, key=elem_key)
        piece = {start}
        stack = [start]
        while stack:
            t = stack.pop()
            for u in (self._up[t] | self._down[t]) & subset:
                if u not in piece:
                    piece.add(u)
                    stack.append(u)
        target = subset - piece
        parent = {s: None for s in piece}
        frontier = _sorted(piece)
        while frontier:
            nxt = []
            for t in frontier:
                for u in _sorted(self._up[t] | self._down[t]):
                    if u in parent:
                        continue
                    parent[u] = t
                    if u in target:
                        path = set()
                        w = t
                        while w is not None and w not in subset:
                            path.add(w)
                            w = parent[w]
                        return path
                    nxt.append(u)
            frontier = nxt
        raise NotConnected("no connecting path exists")

    def gamma_enumerate(self, bound=None):
        """All nonempty convex subsets with at most `bound` elements."""
        if bound is None:
            bound = len(self.elements)
        out = []
        for k in range(1, bound + 1):
            for combo in combinations(self.elements, k):
                if self.is_convex(combo):
                    out.append(frozenset(combo))
        return out

    # -- constructions ---------------------------------------------------------

    def augment(self, sets):
        """Close the order so each given set becomes one equivalence class."""
        sets = [frozenset(s) for s in sets]
        taken = set()
        for s in sets:
            if not s <= set(self.elements):
                raise ValueError("augmentation set %r not within proset" % (_sorted(s),))
            if s & taken:
                raise OverlappingAugmentation(
                    "augmentation sets overlap at %r" % (_sorted(s & taken),)
                )
            taken |= s
        rel = [(a, b) for a in self.elements for b in self._up[a]]
        for s in sets:
            rel.extend((a, b) for a in s for b in s)
        return Proset(self.elements, rel)

    def opposite(self):
        rel = [(b, a) for a in self.elements for b in self._up[a]]
        return Proset(self.elements, rel)

    # -- predicates ------------------------------------------------------------

    def is_poset(self):
        return all(len(self.equiv_class(s)) == 1 for s in self.elements)

    def is_irreducible(self):
        return len(self.components()) == 1

    def is_n_bounded(self, n):
        return all(len(self.neighborhood(s, 1)) <= n for s in self.elements)

    def is_z_like(self):
        """Every element comparable to every other (finite criterion)."""
        full = set(self.elements)
        return all(set(self.neighborhood(s, 1)) == full for s in self.elements)

    # -- isomorphism -------------------------------------------------------------

    def _signature(self, s):
        up, down = self._up[s], self._down[s]
        base = (len(self.equiv_class(s)), len(up), len(down))
        ups = sorted((len(self._up[t]), len(self._down[t])) for t in up)
        downs = sorted((len(self._up[t]), len(self._down[t])) for t in down)
        return (base, tuple(ups), tuple(downs))

    def poset_isomorphic(self, other):
        """Order isomorphism to `other` as a dict, or None.  Works on prosets."""
        if len(self.elements) != len(other.elements):
            return None
        mine = {s: self._signature(s) for s in self.elements}
        theirs = {t: other._signature(t) for t in other.elements}
        if sorted(mine.values()) != sorted(theirs.values()):
            return None
        order = sorted(self.elements, key=lambda s: (mine[s], elem_key(s)))
        candidates = {
            s: [t for t in other.elements if theirs[t] == mine[s]] for s in order
        }

        assignment = {}
        used = set()

        def extend(i):
            if i == len(order):
                return True
            s = order[i]
            for t in candidates[s]:
                if t in used:
                    continue
                ok = True
                for s2, t2 in assignment.items():
                    if self.leq(s, s2) != other.leq(t, t2) or self.leq(s2, s) != other.leq(t2, t):
                        ok = False
                        break
                if ok:
                    assignment[s] = t
                    used.add(t)
                    if extend(i + 1):
                        return True
                    del assignment[s]
                    used.discard(t)
            return False

        return dict(assignment) if extend(0) else None

    def __eq__(self, other):
        return (
            isinstance(other, Proset)
            and self.elements == other.elements
            and self._up == other._up
        )

    def __hash__(self):
        return hash((self.elements, tuple(self._up[s] for s in self.elements)))

    def __repr__(self):
        return "Proset(%d elements, %d pairs)" % (len(self.elements), len(self.pairs()))


def two_block(m, n=0):
    """Proset with an n-element class below an m-element class.

    Every element of the bottom block is <= every element of the top block,
    and each block is a single equivalence class.  n == 0 gives the full
    block on m elements alone.
    """
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    top = ["t%d" % i for i in range(m)]
    bot = ["b%d" % i for i in range(n)]
    rel = [(a, b) for a in top for b in top]
    rel += [(a, b) for a in bot for b in bot]
    rel += [(a, b) for a in bot for b in top]
    return Proset(top + bot, rel)


def interval_closure(pro, subset):
    """One-pass interval closure; works for Proset and family alike."""
    subset = set(subset)
    out = set(subset)
    for a in subset:
        for b in subset:
            if pro.leq(a, b):
                out |= set(pro.interval(a, b))
    return frozenset(out)


# ---------------------------------------------------------------------------
# Infinite families
# ---------------------------------------------------------------------------


class ProsetFamily:
    """Shared interface of the built-in infinite prosets.

    Windows form a cofinal chain of finite convex subsets; restrict() turns
    one into an ordinary Proset.
    """

    kind = "?"

    def contains(self, s):
        raise NotImplementedError

    def leq(self, s1, s2):
        raise NotImplementedError

    def interval(self, s1, s2):
        raise NotImplementedError

    def equiv_class(self, s):
        return frozenset(self.interval(s, s)) or frozenset((s,))

    def up_set(self, s):
        raise InfiniteNeighborhood("%s has infinite up-sets" % self.kind)

    def down_set(self, s):
        raise InfiniteNeighborhood("%s has infinite down-sets" % self.kind)

    def neighborhood(self, s, n):
        if n == 0:
            return self.equiv_class(s)
        reached = set(self.equiv_class(s))
        for _ in range(n):
            grown = set(reached)
            for t in reached:
                grown |= set(self.up_set(t))
                grown |= set(self.down_set(t))
            if grown == reached:
                break
            reached = grown
        return frozenset(reached)

    def has_finite_neighborhoods(self):
        try:
            self.up_set(self.window(1)[0])
        except InfiniteNeighborhood:
            return False
        return True

    def window(self, k):
        """k-th member of the canonical window chain, as a tuple of elements."""
        raise NotImplementedError

    def windows(self, count, start=1):
        return [self.window(k) for k in range(start, start + count)]

    def covering_window_index(self, subset, limit=64):
        for k in range(1, limit + 1):
            if set(subset) <= set(self.window(k)):
                return k
        raise LocalFinitenessBudgetExceeded(
            "no window up to index %d covers %r" % (limit, _sorted(subset))
        )

    def restrict(self, subset):
        subset = list(subset)
        for s in subset:
            if not self.contains(s):
                raise ValueError("%r is not an element of %s" % (s, self.kind))
        rel = [(a, b) for a in subset for b in subset if self.leq(a, b)]
        return Proset(subset, rel)

    def window_proset(self, k):
        return self.restrict(self.window(k))

    def is_convex(self, subset):
        subset = set(subset)
        if not subset:
            return True
        for a in subset:
            for b in subset:
                if self.leq(a, b) and not set(self.interval(a, b)) <= subset:
                    return False
        # connectivity along comparabilities inside the subset
        start = next(iter(subset))
        comp = {start}
        stack = [start]
        while stack:
            t = stack.pop()
            for u in subset:
                if u not in comp and (self.leq(t, u) or self.leq(u, t)):
                    comp.add(u)
                    stack.append(u)
        return comp == subset

    def is_poset(self):
        return True

    def is_irreducible(self):
        return True

    def is_z_like(self):
        return False

    def descriptor(self):
        raise NotImplementedError

    def __repr__(self):
        return "family %s" % self.kind

    def __eq__(self, other):
        return type(self) is type(other) and self.descriptor() == other.descriptor()

    def __hash__(self):
        return hash((type(self).__name__, str(self.descriptor())))


class NFamily(ProsetFamily):
    """Natural numbers with the usual total order."""

    kind = "N"

    def contains(self, s):
        return isinstance(s, int) and not isinstance(s, bool) and s >= 0

    def leq(self, s1, s2):
        return s1 <= s2

    def interval(self, s1, s2):
        if s1 > s2:
            return ()
        return tuple(range(s1, s2 + 1))

    def window(self, k):
        return tuple(range(k + 1))

    def is_z_like(self):
        return True

    def descriptor(self):
        return {"family": "N"}


class ZFamily(ProsetFamily):
    """Integers with the usual total order."""

    kind = "Z"

    def contains(self, s):
        return isinstance(s, int) and not isinstance(s, bool)

    def leq(self, s1, s2):
        return s1 <= s2

    def interval(self, s1, s2):
        if s1 > s2:
            return ()
        return tuple(range(s1, s2 + 1))

    def window(self, k):
        return tuple(range(-k, k + 1))

    def is_z_like(self):
        return True

    def descriptor(self):
        return {"family": "Z"}


class ZigFamily(ProsetFamily):
    """Zigzag on Z: every even 2k sits below its odd neighbors 2k-1, 2k+1."""

    kind = "Zig"

    def contains(self, s):
        return isinstance(s, int) and not isinstance(s, bool)

    def leq(self, s1, s2):
        return s1 == s2 or (s1 % 2 == 0 and abs(s2 - s1) == 1)

    def interval(self, s1, s2):
        if s1 == s2:
            return (s1,)
        if self.leq(s1, s2):
            return _sorted((s1, s2))
        return ()

    def up_set(self, s):
        if s % 2 == 0:
            return (s - 1, s, s + 1)
        return (s,)

    def down_set(self, s):
        if s % 2 == 0:
            return (s,)
        return (s - 1, s, s + 1)

    def window(self, k):
        return tuple(range(-k, k + 1))

    def descriptor(self):
        return {"family": "Zig"}


class NStarDivFamily(ProsetFamily):
    """Positive naturals ordered by divisibility.  N_1(s) is always infinite."""

    kind = "NStarDiv"

    def contains(self, s):
        return isinstance(s, int) and not isinstance(s, bool) and s >= 1

    def leq(self, s1, s2):
        return s2 % s1 == 0

    def interval(self, s1, s2):
        if s2 % s1 != 0:
            return ()
        q = s2 // s1
        divs = []
        d = 1
        while d * d <= q:
            if q % d == 0:
                divs.append(s1 * d)
                divs.append(s1 * (q // d))
            d += 1
        return tuple(sorted(set(divs)))

    def up_set(self, s):
        raise InfiniteNeighborhood("every element of N*_div has infinitely many multiples")

    def down_set(self, s):
        return self.interval(1, s)

    def neighborhood(self, s, n):
        if n == 0:
            return frozenset((s,))
        raise InfiniteNeighborhood(
            "N_%d(%d) contains every multiple of %d" % (n, s, s)
        )

    def window(self, k):
        return self.interval(1, lcm(*range(1, k + 2)))

    def descriptor(self):
        return {"family": {"nstar_div": True}}


class AugmentedFamily(ProsetFamily):
    """A base family with finitely many finite sets each closed into one class.

    The closure is mediated by a finite hub graph: set i reaches set j when
    some element of set i sits below some element of set j in the base order.
    """

    kind = "Augmented"

    def __init__(self, base, sets):
        self.base = base
        self.sets = tuple(frozenset(s) for s in sets)
        taken = set()
        for s in self.sets:
            if not s:
                raise ValueError("augmentation sets must be nonempty")
            for x in s:
                if not base.contains(x):
                    raise ValueError("%r is not in the base family" % (x,))
            if s & taken:
                raise OverlappingAugmentation(
                    "augmentation sets overlap at %r" % (_sorted(s & taken),)
                )
            taken |= s
        n = len(self.sets)
        reach = [[i == j for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                if i != j and any(
                    base.leq(q, t) for q in self.sets[i] for t in self.sets[j]
                ):
                    reach[i][j] = True
        for m in range(n):  # Floyd-Warshall over the hubs
            for i in range(n):
                for j in range(n):
                    if reach[i][m] and reach[m][j]:
                        reach[i][j] = True
        self._reach = reach

    def contains(self, s):
        return self.base.contains(s)

    def _up_hubs(self, s):
        n = len(self.sets)
        entry = [any(self.base.leq(s, t) for t in self.sets[i]) for i in range(n)]
        return [j for j in range(n) if any(entry[i] and self._reach[i][j] for i in range(n))]

    def _down_hubs(self, s):
        n = len(self.sets)
        exit_ = [any(self.base.leq(q, s) for q in self.sets[j]) for j in range(n)]
        return [i for i in range(n) if any(self._reach[i][j] and exit_[j] for j in range(n))]

    def leq(self, s1, s2):
        if self.base.leq(s1, s2):
            return True
        return bool(set(self._up_hubs(s1)) & set(self._down_hubs(s2)))

    def interval(self, s1, s2):
        out = set()
        if self.base.leq(s1, s2):
            out |= set(self.base.interval(s1, s2))
        ups = self._up_hubs(s1)
        downs = self._down_hubs(s2)
        for i in downs:
            for t in self.sets[i]:
                if self.base.leq(s1, t):
                    out |= set(self.base.interval(s1, t))
        for j in ups:
            for q in self.sets[j]:
                if self.base.leq(q, s2):
                    out |= set(self.base.interval(q, s2))
        for j in ups:
            for q in self.sets[j]:
                for i in downs:
                    for t in self.sets[i]:
                        if self.base.leq(q, t):
                            out |= set(self.base.interval(q, t))
        if not out:
            return ()
        return _sorted(out)

    def up_set(self, s):
        out = set(self.base.up_set(s))
        for j in self._up_hubs(s):
            for q in self.sets[j]:
                out |= set(self.base.up_set(q))
                out.add(q)
        return _sorted(out)

    def down_set(self, s):
        out = set(self.base.down_set(s))
        for i in self._down_hubs(s):
            for t in self.sets[i]:
                out |= set(self.base.down_set(t))
                out.add(t)
        return _sorted(out)

    def is_poset(self):
        return all(len(s) == 1 for s in self.sets) and self.base.is_poset()

    def is_z_like(self):
        return self.base.is_z_like()

    def window(self, k):
        hub = set().union(*self.sets) if self.sets else set()
        need = k
        while True:
            w = set(self.base.window(need)) | hub
            w = set(interval_closure(self, w))
            if self.is_convex(w):
                return _sorted(w)
            need += 1
            if need > k + 64:
                raise LocalFinitenessBudgetExceeded("augmented window did not close")

    def descriptor(self):
        return {
            "augment": {
                "base": self.base.descriptor(),
                "sets": [list(_sorted(s)) for s in self.sets],
            }
        }


class CustomFamily(ProsetFamily):
    """Programmatic family: leq and interval callbacks with a hard budget.

    Every enumeration the callbacks feed is cut off at `budget` elements and
    LocalFinitenessBudgetExceeded raised, so a wrong callback cannot hang the
    process.
    """

    kind = "Custom"

    def __init__(self, leq, interval, contains=None, window=None,
                 budget=DEFAULT_BUDGET, poset=True, z_like=False):
        self._leq = leq
        self._interval = interval
        self._contains = contains or (lambda s: True)
        self._window = window
        self.budget = budget
        self._poset = poset
        self._z_like = z_like

    def contains(self, s):
        return self._contains(s)

    def leq(self, s1, s2):
        return self._leq(s1, s2)

    def interval(self, s1, s2):
        got = tuple(islice(iter(self._interval(s1, s2)), self.budget + 1))
        if len(got) > self.budget:
            raise LocalFinitenessBudgetExceeded(
                "interval [%r, %r] exceeded budget %d" % (s1, s2, self.budget)
            )
        return _sorted(got)

    def window(self, k):
        if self._window is None:
            raise ValueError("this custom family has no window callback")
        got = tuple(islice(iter(self._window(k)), self.budget + 1))
        if len(got) > self.budget:
            raise LocalFinitenessBudgetExceeded(
                "window %d exceeded budget %d" % (k, self.budget)
            )
        return got

    def is_poset(self):
        return self._poset

    def is_z_like(self):
        return self._z_like

    def descriptor(self):
        return {"family": "custom"}
