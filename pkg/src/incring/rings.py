"""Exact coefficient rings: Z, Q, Z/n and prime fields.

A ring object is a namespace of operations; the element values themselves are
plain python data (int for Z and Z/n, Fraction for Q), so equality of matrix
entries is just ==.  Everything is exact, there is no floating point anywhere.
"""

from fractions import Fraction
from math import gcd

from .errors import NotInvertible

__all__ = [
    "CoeffRing",
    "IntegerRing",
    "RationalRing",
    "ModRing",
    "PrimeField",
    "ZZ",
    "QQ",
]


class CoeffRing:
    """Base class.  Subclasses fix a carrier and implement the arithmetic."""

    name = "?"
    finite = False

    # -- arithmetic -------------------------------------------------------

    def canon(self, a):
        """Validate and normalize a raw value into the canonical carrier."""
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    # -- units and idempotents --------------------------------------------

    def is_unit(self, a):
        raise NotImplementedError

    def inv(self, a):
        """Multiplicative inverse; raises NotInvertible off the unit group."""
        raise NotImplementedError

    def elements(self):
        """All elements (finite rings only)."""
        raise ValueError("infinite ring has no element enumeration")

    def units(self):
        return [a for a in self.elements() if self.is_unit(a)]

    def boolean_part(self):
        """frozenset {a : a*a == a}.  Finite rings scan; Z and Q know theirs."""
        return frozenset(a for a in self.elements() if self.mul(a, a) == a)

    def has_unit_pair(self):
        """Whether some units p1, p2 have p1 - p2 again a unit."""
        for p1 in self.units():
            for p2 in self.units():
                if self.is_unit(self.sub(p1, p2)):
                    return True
        return False

    # -- conversions --------------------------------------------------------

    def parse(self, text):
        raise NotImplementedError

    def format(self, a):
        return str(a)

    def random(self, rng):
        raise NotImplementedError

    def descriptor(self):
        raise NotImplementedError

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return type(self) is type(other) and self.descriptor() == other.descriptor()

    def __hash__(self):
        return hash((type(self).__name__, self.name))


class IntegerRing(CoeffRing):
    """Z with arbitrary precision integers."""

    name = "Z"
    zero = 0
    one = 1

    def canon(self, a):
        if isinstance(a, bool) or not isinstance(a, int):
            raise TypeError("Z carries python ints, got %r" % (a,))
        return a

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_unit(self, a):
        return a == 1 or a == -1

    def inv(self, a):
        if not self.is_unit(a):
            raise NotInvertible("%r is not a unit of Z" % (a,))
        return a

    def boolean_part(self):
        # a*a == a over a domain forces a in {0, 1}
        return frozenset((0, 1))

    def has_unit_pair(self):
        # units are {1, -1}; all differences are 0 or +-2, never units
        return False

    def parse(self, text):
        return int(text)

    def random(self, rng):
        return rng.randint(-9, 9)

    def descriptor(self):
        return {"ring": "Z"}


class RationalRing(CoeffRing):
    """Q, carried by Fraction (always lowest terms, positive denominator)."""

    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def canon(self, a):
        if isinstance(a, bool):
            raise TypeError("Q carries Fractions, got %r" % (a,))
        if isinstance(a, (int, Fraction)):
            return Fraction(a)
        raise TypeError("Q carries Fractions, got %r" % (a,))

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise NotInvertible("0 is not a unit of Q")
        return 1 / Fraction(a)

    def boolean_part(self):
        return frozenset((Fraction(0), Fraction(1)))

    def has_unit_pair(self):
        return True  # 2 - 1 = 1

    def parse(self, text):
        return Fraction(text)

    def random(self, rng):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    def descriptor(self):
        return {"ring": "Q"}


class ModRing(CoeffRing):
    """Z/n with canonical representatives 0..n-1; n >= 2."""

    finite = True

    def __init__(self, n):
        if not isinstance(n, int) or n < 2:
            raise ValueError("modulus must be an integer >= 2")
        self.n = n
        self.name = "Z/%d" % n
        self.zero = 0
        self.one = 1 % n

    def canon(self, a):
        if isinstance(a, bool) or not isinstance(a, int):
            raise TypeError("%s carries ints, got %r" % (self.name, a))
        return a % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def is_unit(self, a):
        return gcd(a, self.n) == 1

    def inv(self, a):
        if not self.is_unit(a):
            raise NotInvertible("%d is not a unit mod %d" % (a, self.n))
        return pow(a, -1, self.n)

    def elements(self):
        return range(self.n)

    def parse(self, text):
        return int(text) % self.n

    def random(self, rng):
        return rng.randrange(self.n)

    def descriptor(self):
        return {"ring": {"mod": self.n}}


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField(ModRing):
    """F_p for prime p."""

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError("%r is not prime" % (p,))
        super().__init__(p)
        self.name = "F%d" % p

    def descriptor(self):
        return {"ring": {"gf": self.n}}


ZZ = IntegerRing()
QQ = RationalRing()
