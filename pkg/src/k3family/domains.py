"""Coefficient domains: arbitrary-precision integers, rationals, prime fields.

A domain object bundles characteristic, canonical 0/1, arithmetic, and
coercion.  Polynomial code only goes through this interface, so swapping the
ground ring of a computation (ZZ for fraction-free elimination, GF(p) for
modular pipelines) never touches the algorithms.
"""

from __future__ import annotations

from fractions import Fraction


class DomainError(Exception):
    pass


class NotInvertibleError(DomainError):
    pass


class Domain:
    """Shared behavior; concrete domains fill in the coercion and division."""

    characteristic: int = 0
    name: str = "?"
    is_field: bool = False

    zero = 0
    one = 1

    def of(self, x):
        raise NotImplementedError

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return a == self.zero

    def invert(self, a):
        raise NotImplementedError

    def exact_div(self, a, b):
        """a / b when exact; raises DomainError otherwise."""
        raise NotImplementedError

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def to_str(self, a) -> str:
        return str(a)

    def from_str(self, s: str):
        return self.of(Fraction(s))

    def __repr__(self):
        return self.name


class IntegerRing(Domain):
    characteristic = 0
    name = "ZZ"
    is_field = False

    def of(self, x):
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise DomainError(f"{x} is not an integer")
            return x.numerator
        raise DomainError(f"cannot coerce {x!r} into ZZ")

    def invert(self, a):
        if a in (1, -1):
            return a
        raise NotInvertibleError(f"{a} is not a unit in ZZ")

    def exact_div(self, a, b):
        if b == 0:
            raise DomainError("division by zero")
        q, r = divmod(a, b)
        if r != 0:
            raise DomainError(f"{a} is not divisible by {b} in ZZ")
        return q

    def is_unit(self, a):
        return a in (1, -1)


class RationalField(Domain):
    characteristic = 0
    name = "QQ"
    is_field = True

    zero = Fraction(0)
    one = Fraction(1)

    def of(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise DomainError(f"cannot coerce {x!r} into QQ")

    def invert(self, a):
        if a == 0:
            raise NotInvertibleError("0 is not invertible")
        return 1 / Fraction(a)

    def exact_div(self, a, b):
        if b == 0:
            raise DomainError("division by zero")
        return Fraction(a) / b

    def is_unit(self, a):
        return a != 0

    def to_str(self, a) -> str:
        return str(a)


class PrimeField(Domain):
    """GF(p) for prime p, elements as canonical ints in [0, p)."""

    is_field = True

    def __init__(self, p: int):
        if p < 2:
            raise DomainError("characteristic must be a prime >= 2")
        # deterministic Miller-Rabin, exact for word-sized p
        if not _is_prime(p):
            raise DomainError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def of(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise DomainError(f"denominator of {x} vanishes mod {self.p}")
            return (x.numerator % self.p) * pow(den, -1, self.p) % self.p
        raise DomainError(f"cannot coerce {x!r} into {self.name}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def invert(self, a):
        a %= self.p
        if a == 0:
            raise NotInvertibleError("0 is not invertible")
        return pow(a, -1, self.p)

    def exact_div(self, a, b):
        return self.mul(a, self.invert(b))

    def is_unit(self, a):
        return a % self.p != 0

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic witness set for n < 3.3 * 10^24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


ZZ = IntegerRing()
QQ = RationalField()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """Cached prime-field constructor."""
    f = _gf_cache.get(p)
    if f is None:
        f = PrimeField(p)
        _gf_cache[p] = f
    return f


# default prime of the verification suite: 2^61 - 1, a Mersenne prime that
# leaves enough headroom for native-word modular arithmetic in the kernels
DEFAULT_PRIME = (1 << 61) - 1
