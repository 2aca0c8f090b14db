"""Elliptic curves in long Weierstrass form over Q or F_p.

y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6.  The general form is kept
(rather than forcing short models) so database curves load losslessly;
the chord-tangent group law is implemented for arbitrary a1..a6.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadPrime, BadReduction, PointNotOnCurve, SingularCurve
from .fields import Fp, PrimeField, chi_table, quad_char, rat_mod_p

MAZUR_ORDERS = frozenset(range(1, 11)) | {12}


def mazur_admissible(n):
    """True iff n can be the order of a rational torsion point over Q."""
    if n < 1:
        raise ValueError("order must be positive")
    return n in MAZUR_ORDERS


@dataclass(frozen=True)
class EllPoint:
    """Affine point (x, y), or the point at infinity (x = y = None)."""

    x: object = None
    y: object = None

    @property
    def is_infinity(self):
        return self.x is None

    def __repr__(self):
        return "inf" if self.is_infinity else f"({self.x},{self.y})"


INFINITY = EllPoint()


@dataclass(frozen=True)
class EllCurve:
    a1: object
    a2: object
    a3: object
    a4: object
    a6: object

    def __post_init__(self):
        if self.discriminant() == 0:
            raise SingularCurve(f"discriminant vanishes for {self}")

    @staticmethod
    def short(a4, a6):
        return EllCurve(0, 0, 0, a4, a6)

    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    def discriminant(self):
        b2, b4, b6, b8 = self.b_invariants()
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def contains(self, pt):
        if pt.is_infinity:
            return True
        x, y = pt.x, pt.y
        lhs = y * y + self.a1 * x * y + self.a3 * y
        rhs = x ** 3 + self.a2 * x * x + self.a4 * x + self.a6
        return lhs == rhs

    def negate(self, pt):
        if pt.is_infinity:
            return pt
        return EllPoint(pt.x, -pt.y - self.a1 * pt.x - self.a3)

    def __repr__(self):
        return f"ell [{self.a1},{self.a2},{self.a3},{self.a4},{self.a6}]"


def ell_add(E, P, Q):
    """Chord-tangent addition; infinity is the identity."""
    if not (E.contains(P) and E.contains(Q)):
        raise PointNotOnCurve(f"input not on {E}")
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    a1, a2, a3, a4, a6 = E.a1, E.a2, E.a3, E.a4, E.a6
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        if y2 == -y1 - a1 * x1 - a3:
            return INFINITY
        num = 3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1
        den = 2 * y1 + a1 * x1 + a3
    else:
        num = y2 - y1
        den = x2 - x1
    lam = num / den
    nu = y1 - lam * x1
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return EllPoint(x3, y3)


def ell_mul(E, n, P):
    """n*P by repeated addition (orders here never exceed 12-ish)."""
    if n < 0:
        return ell_mul(E, -n, E.negate(P))
    R = INFINITY
    for _ in range(n):
        R = ell_add(E, R, P)
    return R


def ell_order(E, P):
    """Smallest n <= 12 with n*P = infinity, else None.

    Capped by the classification of rational torsion: any rational point
    of finite order has order in {1..10, 12}, so 12 steps decide torsion
    over Q.  None means "nontorsion or order > 12".
    """
    if not E.contains(P):
        raise PointNotOnCurve(f"{P} not on {E}")
    R = P
    for n in range(1, 13):
        if R.is_infinity:
            return n
        R = ell_add(E, R, P)
    return None


def _ell_order_loop(E, P):
    R = P
    n = 1
    while not R.is_infinity:
        R = ell_add(E, R, P)
        n += 1
    return n


def ell_count(E):
    """#E(F_p) for a curve over an odd prime field.

    Counts 1 + sum_x (1 + chi(rhs(x))) after completing the square:
    (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
    """
    field = _base_field(E)
    if field is None:
        raise TypeError("ell_count expects a curve over F_p")
    p = field.p
    b2, b4, b6, _ = E.b_invariants()
    c3, c2, c1, c0 = 4, b2.value, (2 * b4).value, b6.value
    chi = chi_table(p)
    total = 1
    for x in range(p):
        v = ((c3 * x + c2) * x + c1) * x + c0
        total += 1 + chi[v % p]
    return total


def trace_of_frobenius(E):
    return _base_field(E).p + 1 - ell_count(E)


def ell_reduce(E, p):
    """Reduce a curve over Q mod an odd prime of good reduction."""
    if p == 2:
        raise BadPrime("reduction mod 2 is not supported")
    field = PrimeField(p)
    coeffs = []
    for a in (E.a1, E.a2, E.a3, E.a4, E.a6):
        coeffs.append(rat_mod_p(Fraction(a), field))
    try:
        return EllCurve(*coeffs)
    except SingularCurve as exc:
        raise BadReduction(f"{E} is singular mod {p}") from exc


def good_odd_primes(E, limit):
    """Odd primes p <= limit at which the given model reduces well."""
    from .fields import primes_up_to

    out = []
    for p in primes_up_to(limit):
        if p == 2:
            continue
        try:
            ell_reduce(E, p)
        except (BadPrime, BadReduction):
            continue
        out.append(p)
    return out


def _base_field(E):
    if isinstance(E.a4, Fp):
        return E.a4.field
    if isinstance(E.a6, Fp):
        return E.a6.field
    for a in (E.a1, E.a2, E.a3):
        if isinstance(a, Fp):
            return a.field
    return None
