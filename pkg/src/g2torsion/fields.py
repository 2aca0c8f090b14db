"""Prime fields, their quadratic extensions, and quadratic characters.

Elements are small immutable objects carrying a reference to their field,
so polynomial code can stay generic over the coefficient ring.  Integers
coerce into any field element they are combined with; rationals must be
moved explicitly with :func:`rat_mod_p`.
"""

from fractions import Fraction
from functools import lru_cache

from .errors import BadPrime, NonInvertible

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic primality test (trial division; desk-scale inputs)."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d = 41
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_up_to(limit):
    """All primes <= limit, ascending (simple sieve)."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(limit ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


def least_nonresidue(p):
    """Smallest positive quadratic nonresidue mod an odd prime p."""
    for a in range(2, p):
        if pow(a, (p - 1) // 2, p) == p - 1:
            return a
    raise ValueError(f"no nonresidue found mod {p}")  # unreachable for p odd prime


@lru_cache(maxsize=None)
class PrimeField:
    """The field F_p for an odd prime p.  Instances are interned."""

    def __init__(self, p):
        if p == 2 or not is_prime(p):
            raise BadPrime(f"modulus {p} is not an odd prime")
        self.p = p

    def __call__(self, value):
        return Fp(value % self.p, self)

    @property
    def zero(self):
        return Fp(0, self)

    @property
    def one(self):
        return Fp(1, self)

    def elements(self):
        return [Fp(v, self) for v in range(self.p)]

    def sqrt(self, a):
        """A square root of a in F_p, or None.  Brute force; p stays small."""
        a = a % self.p if isinstance(a, int) else a.value
        for r in range((self.p + 1) // 2):
            if r * r % self.p == a:
                return Fp(r, self)
        return None

    def __repr__(self):
        return f"F_{self.p}"


class Fp:
    """An element of F_p."""

    __slots__ = ("value", "field")

    def __init__(self, value, field):
        self.value = value
        self.field = field

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.field is not self.field:
                raise TypeError("mixed prime fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp((self.value + v) % self.field.p, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp((self.value - v) % self.field.p, self.field)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp((v - self.value) % self.field.p, self.field)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp(self.value * v % self.field.p, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.value % self.field.p, self.field)

    def inverse(self):
        if self.value == 0:
            raise NonInvertible(f"0 in {self.field}")
        return Fp(pow(self.value, -1, self.field.p), self.field)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self * Fp(v, self.field).inverse()

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp(v, self.field) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return Fp(pow(self.value, n, self.field.p), self.field)

    def __eq__(self, other):
        try:
            v = self._coerce(other)
        except TypeError:
            return False
        return NotImplemented if v is None else self.value == v

    def __hash__(self):
        # Fp(v) == v for plain ints, so the hashes must agree too.
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}"


@lru_cache(maxsize=None)
class QuadraticField:
    """F_{p^2} = F_p(t) with t^2 equal to the least nonresidue mod p."""

    def __init__(self, p):
        self.base = PrimeField(p)
        self.p = p
        self.nonresidue = least_nonresidue(p)

    def __call__(self, c0, c1=0):
        return Fp2(c0 % self.p, c1 % self.p, self)

    @property
    def zero(self):
        return Fp2(0, 0, self)

    @property
    def one(self):
        return Fp2(1, 0, self)

    def elements(self):
        return [Fp2(a, b, self) for b in range(self.p) for a in range(self.p)]

    def from_base(self, a):
        return Fp2(a.value if isinstance(a, Fp) else a % self.p, 0, self)

    def sqrt(self, a):
        """A square root in F_{p^2}, or None.  Brute force; q stays small."""
        for cand in self.elements():
            if cand * cand == a:
                return cand
        return None

    def __repr__(self):
        return f"F_{self.p}^2"


class Fp2:
    """An element c0 + c1*t of F_{p^2}, t^2 = nonresidue."""

    __slots__ = ("c0", "c1", "field")

    def __init__(self, c0, c1, field):
        self.c0 = c0
        self.c1 = c1
        self.field = field

    def _coerce(self, other):
        if isinstance(other, Fp2):
            if other.field is not self.field:
                raise TypeError("mixed quadratic fields")
            return other.c0, other.c1
        if isinstance(other, int):
            return other % self.field.p, 0
        if isinstance(other, Fp):
            return other.value, 0
        return None

    def __add__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        p = self.field.p
        return Fp2((self.c0 + co[0]) % p, (self.c1 + co[1]) % p, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        p = self.field.p
        return Fp2((self.c0 - co[0]) % p, (self.c1 - co[1]) % p, self.field)

    def __rsub__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        p = self.field.p
        return Fp2((co[0] - self.c0) % p, (co[1] - self.c1) % p, self.field)

    def __mul__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        p, nr = self.field.p, self.field.nonresidue
        a0, a1 = self.c0, self.c1
        return Fp2(
            (a0 * co[0] + nr * a1 * co[1]) % p,
            (a0 * co[1] + a1 * co[0]) % p,
            self.field,
        )

    __rmul__ = __mul__

    def __neg__(self):
        p = self.field.p
        return Fp2(-self.c0 % p, -self.c1 % p, self.field)

    def norm(self):
        """Norm to F_p: c0^2 - nonresidue * c1^2."""
        p = self.field.p
        return (self.c0 * self.c0 - self.field.nonresidue * self.c1 * self.c1) % p

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise NonInvertible(f"0 in {self.field}")
        ninv = pow(n, -1, self.field.p)
        p = self.field.p
        return Fp2(self.c0 * ninv % p, -self.c1 * ninv % p, self.field)

    def __truediv__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        return self * Fp2(co[0], co[1], self.field).inverse()

    def __rtruediv__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        return Fp2(co[0], co[1], self.field) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            co = self._coerce(other)
        except TypeError:
            return False
        return NotImplemented if co is None else (self.c0, self.c1) == co

    def __hash__(self):
        # consistent with coercing equality against ints and F_p elements
        return hash(self.c0) if self.c1 == 0 else hash((self.c0, self.c1))

    def __bool__(self):
        return self.c0 != 0 or self.c1 != 0

    def encoding(self):
        """Lexicographic key used for deterministic tie-breaking."""
        return (self.c0, self.c1)

    def __repr__(self):
        if self.c1 == 0:
            return f"{self.c0}"
        return f"({self.c0}+{self.c1}t)"


def quad_char(a):
    """Quadratic character of a field element: 0, +1, or -1.

    Computed as a^((q-1)/2) for field size q; for F_{p^2} this reduces to
    the character of the norm, which avoids extension-field exponentiation.
    """
    if isinstance(a, Fp):
        if a.value == 0:
            return 0
        r = pow(a.value, (a.field.p - 1) // 2, a.field.p)
        return 1 if r == 1 else -1
    if isinstance(a, Fp2):
        n = a.norm()
        if n == 0:
            return 0
        r = pow(n, (a.field.p - 1) // 2, a.field.p)
        return 1 if r == 1 else -1
    raise TypeError(f"quad_char expects a finite-field element, got {type(a)}")


@lru_cache(maxsize=None)
def chi_table(p):
    """Tuple chi[v] of quadratic characters of 0..p-1 mod p."""
    chi = [-1] * p
    chi[0] = 0
    for t in range(1, p):
        chi[t * t % p] = 1
    return tuple(chi)


def rat_mod_p(x, field):
    """Image of a rational number in F_p; BadPrime if p divides the denominator."""
    x = Fraction(x)
    p = field.p
    if x.denominator % p == 0:
        raise BadPrime(f"{x} has denominator divisible by {p}")
    num = x.numerator % p
    den_inv = pow(x.denominator % p, -1, p)
    return field(num * den_inv)
