"""Quadratic algebras K[T]/(T^2 - c) over an exact base field K.

The main instance is L = K[T]/(T^2 + 7) with generator rho (rho^2 = -7),
which carries the square-class computations behind the order-48 torsion
construction.  The same machinery, with c equal to a cubic in z, models
the coordinate ring extension K(z)[w]/(w^2 - (z^3 + 14 z^2 + 196 z)).
"""

from fractions import Fraction

from .errors import NonInvertible


class QuadraticAlgebra:
    """The algebra K[T]/(T^2 - square), K the ring of ``one``."""

    def __init__(self, square, one):
        self.square = square
        self.one = one

    def __call__(self, c0, c1=None):
        zero = self.one - self.one
        if c1 is None:
            c1 = zero
        if isinstance(c0, int):
            c0 = c0 * self.one
        if isinstance(c1, int):
            c1 = c1 * self.one
        return QuadAlgebraElem(c0, c1, self)

    @property
    def gen(self):
        return self(0, 1)

    @property
    def zero(self):
        return self(0, 0)

    def __eq__(self, other):
        return (
            isinstance(other, QuadraticAlgebra)
            and type(self.one) is type(other.one)
            and self.square == other.square
        )

    def __hash__(self):
        return hash(("QuadraticAlgebra", type(self.one).__name__, self.square))


class QuadAlgebraElem:
    """c0 + c1*g with g^2 = algebra.square."""

    __slots__ = ("c0", "c1", "algebra")

    def __init__(self, c0, c1, algebra):
        self.c0 = c0
        self.c1 = c1
        self.algebra = algebra

    def _coerce(self, other):
        if isinstance(other, QuadAlgebraElem):
            if other.algebra != self.algebra:
                raise TypeError("mixed quadratic algebras")
            return other
        one = self.algebra.one
        if isinstance(other, int):
            return QuadAlgebraElem(other * one, one - one, self.algebra)
        if type(other) is type(one):
            return QuadAlgebraElem(other, one - one, self.algebra)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadAlgebraElem(self.c0 + o.c0, self.c1 + o.c1, self.algebra)

    __radd__ = __add__

    def __neg__(self):
        return QuadAlgebraElem(-self.c0, -self.c1, self.algebra)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadAlgebraElem(self.c0 - o.c0, self.c1 - o.c1, self.algebra)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadAlgebraElem(o.c0 - self.c0, o.c1 - self.c1, self.algebra)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        sq = self.algebra.square
        return QuadAlgebraElem(
            self.c0 * o.c0 + sq * self.c1 * o.c1,
            self.c0 * o.c1 + self.c1 * o.c0,
            self.algebra,
        )

    __rmul__ = __mul__

    def norm(self):
        """c0^2 - square*c1^2 (equals c0^2 + 7*c1^2 when square = -7)."""
        return self.c0 * self.c0 - self.algebra.square * self.c1 * self.c1

    def conjugate(self):
        return QuadAlgebraElem(self.c0, -self.c1, self.algebra)

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise NonInvertible("element of norm 0")
        if isinstance(n, int):
            n = Fraction(n)
        ninv = 1 / n
        return QuadAlgebraElem(self.c0 * ninv, -self.c1 * ninv, self.algebra)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.algebra(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return False
        if o is None:
            return NotImplemented
        return self.c0 == o.c0 and self.c1 == o.c1

    def __hash__(self):
        return hash(self.c0) if self.c1 == 0 else hash((self.c0, self.c1))

    def is_zero(self):
        return self.c0 == 0 and self.c1 == 0

    def __repr__(self):
        return f"({self.c0} + {self.c1}*g)"


def sqrt_minus7_algebra(one=Fraction(1)):
    """L = K[T]/(T^2 + 7) over the field containing ``one``."""
    return QuadraticAlgebra(-7 * one, one)
