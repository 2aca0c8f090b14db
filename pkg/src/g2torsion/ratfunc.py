"""Rational functions over Q in one variable, stored in lowest terms.

Numerator and denominator are Fraction-coefficient polynomials with
gcd(num, den) = 1 and den monic, so equality is plain component
comparison.  These are the coefficients for symbolic identity checks
in one parameter.
"""

from fractions import Fraction

from .errors import NonInvertible
from .polys import Poly, poly_gcd

_ONE = Poly((Fraction(1),))


def _fracpoly(p):
    if isinstance(p, Poly):
        return p.map_coeffs(Fraction)
    return Poly((Fraction(p),))


class RatFn:
    """num/den with den monic and gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=_ONE):
        num = _fracpoly(num)
        den = _fracpoly(den)
        if den.is_zero():
            raise NonInvertible("zero denominator")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lc = den.leading()
        if lc != 1:
            inv = Fraction(1) / lc
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @staticmethod
    def variable():
        """The identity function x."""
        return RatFn(Poly((Fraction(0), Fraction(1))))

    def is_zero(self):
        return self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, RatFn):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFn(Poly((Fraction(other),)))
        if isinstance(other, Poly):
            return RatFn(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFn(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise NonInvertible("inverse of the zero function")
        return RatFn(self.den, self.num)

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
        result = RatFn(_ONE)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, x):
        den = self.den.evaluate(x)
        if den == 0:
            raise NonInvertible("evaluation at a pole")
        return self.num.evaluate(x) / den

    def __repr__(self):
        if self.den == _ONE:
            return f"RatFn({list(self.num.coeffs)})"
        return f"RatFn({list(self.num.coeffs)} / {list(self.den.coeffs)})"
