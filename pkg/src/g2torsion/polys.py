"""Dense univariate polynomials over an exact coefficient ring.

Coefficients are stored ascending by degree with no trailing zeros; the
zero polynomial has an empty coefficient tuple.  The ring is duck-typed:
anything supporting +, -, *, equality with 0/1 and (for divmod/gcd)
division works, so the same class serves Q, F_p, F_{p^2} and the
quadratic algebras.  Plain ints mix freely with any of these.
"""

from fractions import Fraction

from .errors import NonInvertible


class Poly:
    """Immutable dense polynomial; ``Poly((a0, a1, ...))``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = tuple(coeffs)
        n = len(coeffs)
        while n and coeffs[n - 1] == 0:
            n -= 1
        self.coeffs = coeffs[:n]

    @staticmethod
    def constant(c):
        return Poly((c,))

    @staticmethod
    def x_power(k, one=1):
        return Poly((0,) * k + (one,))

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if self.degree <= 0:
            if not self.coeffs:
                return other == 0
            return self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else Poly((-other,)))

    def __rsub__(self, other):
        return Poly((other,)) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if other == 0:
                return Poly(())
            return Poly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = Poly((1,)) if not self.coeffs else Poly((self.leading() * 0 + 1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        """Euclidean division; the divisor needs an invertible leading coefficient."""
        if not isinstance(other, Poly):
            other = Poly((other,))
        if other.is_zero():
            raise NonInvertible("division by the zero polynomial")
        lc = other.leading()
        if lc == 1:
            lc_inv = 1
        elif isinstance(lc, int):
            lc_inv = -1 if lc == -1 else Fraction(1, lc)
        else:
            try:
                lc_inv = 1 / lc
            except (NonInvertible, ZeroDivisionError) as exc:
                raise NonInvertible("leading coefficient is not invertible") from exc
        rem = list(self.coeffs)
        db = other.degree
        if self.degree < db:
            return Poly(()), self
        quo = [0] * (self.degree - db + 1)
        for k in range(self.degree - db, -1, -1):
            c = rem[k + db] * lc_inv
            if c == 0:
                continue
            quo[k] = c
            for j, bc in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * bc
        return Poly(quo), Poly(rem[:db] if db > 0 else ())

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        """Quotient self/other, asserting the division is exact."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("division was not exact")
        return q

    def monic(self):
        if self.is_zero():
            return self
        lc = self.leading()
        if lc == 1:
            return self
        if isinstance(lc, (int, Fraction)):
            inv = Fraction(1) / Fraction(lc)
        else:
            inv = 1 / lc
        return Poly(tuple(c * inv for c in self.coeffs))

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    __call__ = evaluate

    def derivative(self):
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def map_coeffs(self, fn):
        return Poly(tuple(fn(c) for c in self.coeffs))

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"


def poly_gcd(a, b):
    """Monic gcd over a field (Euclid)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_xgcd(a, b):
    """Extended gcd: returns (g, s, t) with g = s*a + t*b, g monic."""
    r0, r1 = a, b
    s0, s1 = Poly((1,)), Poly(())
    t0, t1 = Poly(()), Poly((1,))
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lc = r0.leading()
    if lc == 1:
        return r0, s0, t0
    inv = (Fraction(1) / Fraction(lc)) if isinstance(lc, (int, Fraction)) else 1 / lc
    return r0 * inv, s0 * inv, t0 * inv


def resultant(a, b):
    """Resultant of two polynomials over a field, via the Euclidean chain."""
    if a.is_zero() or b.is_zero():
        return 0
    res = 1
    while True:
        db = b.degree
        if db == 0:
            return res * b.leading() ** a.degree
        r = a % b
        if r.is_zero():
            return 0
        res = res * (-1) ** (a.degree * db) * b.leading() ** (a.degree - r.degree)
        a, b = b, r


def discriminant(f):
    """Discriminant of f: zero iff f has a repeated root in the closure.

    disc(f) = (-1)^(n(n-1)/2) * resultant(f, f') / lc(f), the standard
    normalization.  Degree-1 polynomials have discriminant 1.
    """
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    fp = f.derivative()
    if fp.is_zero():
        return 0
    res = resultant(f, fp)
    sign = (-1) ** (n * (n - 1) // 2)
    lc = f.leading()
    if lc == 1:
        return sign * res
    if isinstance(res, int) and isinstance(lc, int) and res % lc == 0:
        return sign * (res // lc)
    if isinstance(lc, (int, Fraction)):
        return sign * Fraction(res) / Fraction(lc)
    return sign * res * (1 / lc)
