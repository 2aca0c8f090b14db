"""Genus-2 models y^2 + h(x) y = f(x), counting, and Jacobian orders.

The completed square F = h^2 + 4f (degree 5 or 6, squarefree) drives
everything: nonsingularity, counting via the quadratic character, and
reduction mod p.  Counting is naive O(q) per extension degree, which is
all that primes up to a few hundred need; #J(F_p) comes from the
degree-4 zeta functional equation as (N1^2 + N2)/2 - p.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .errors import BadPrime, BadReduction, SingularOrWrongGenus, ZeroWeight
from .fields import Fp, PrimeField, chi_table, least_nonresidue, rat_mod_p
from .polys import Poly, discriminant


@dataclass(frozen=True)
class G2Curve:
    """A nonsingular genus-2 curve y^2 + h y = f over Q or F_p."""

    h: Poly
    f: Poly

    def __post_init__(self):
        if self.h.degree > 3:
            raise SingularOrWrongGenus("deg h must be <= 3")
        if self.f.degree > 6:
            raise SingularOrWrongGenus("deg f must be <= 6")
        F = self.square_completion()
        if F.degree not in (5, 6):
            raise SingularOrWrongGenus(f"h^2 + 4f has degree {F.degree}, need 5 or 6")
        if discriminant(F) == 0:
            raise SingularOrWrongGenus("h^2 + 4f has a repeated root")

    def square_completion(self):
        """F = h^2 + 4f, so that (2y + h)^2 = F."""
        return self.h * self.h + 4 * self.f

    def base_prime(self):
        """p if the curve lives over F_p, else None (curve over Q)."""
        for c in self.f.coeffs + self.h.coeffs:
            if isinstance(c, Fp):
                return c.field.p
        return None

    def contains(self, x, y):
        return y * y + self.h.evaluate(x) * y == self.f.evaluate(x)

    def __repr__(self):
        return f"g2 {list(self.h.coeffs)} {list(self.f.coeffs)}"


def g2_new(h, f):
    """Validated construction from coefficient polynomials."""
    if not isinstance(h, Poly):
        h = Poly(h)
    if not isinstance(f, Poly):
        f = Poly(f)
    return G2Curve(h, f)


def g2_from_weighted(d, F):
    """Convert d*y^2 = F(x) (deg F = 6) to the y^2 = d*F model.

    The substitution y -> y/d turns d y^2 = F into y^2 = d F, so both
    equations define the same curve over the base field.
    """
    d = Fraction(d)
    if d == 0:
        raise ZeroWeight("weight d must be nonzero")
    if not isinstance(F, Poly):
        F = Poly(F)
    if F.degree != 6:
        raise SingularOrWrongGenus("weighted model needs a sextic right-hand side")
    return G2Curve(Poly(()), F.map_coeffs(lambda c: d * Fraction(c)))


@dataclass(frozen=True)
class JacOrderRecord:
    """Point counts of one reduction and the resulting Jacobian order."""

    p: int
    n1: int
    n2: int
    jac_order: int


def g2_reduce(C, p):
    """Reduce a curve over Q mod an odd prime, conservatively.

    Requires p odd, p coprime to all coefficient denominators, p not
    dividing lc(F) (so the degree of F is stable), and F squarefree
    mod p.  Primes failing any test are simply unusable for this model.
    """
    if p == 2:
        raise BadPrime("reduction mod 2 is not supported")
    field = PrimeField(p)
    F = C.square_completion()
    lc = Fraction(F.leading())
    if lc.denominator % p != 0 and lc.numerator % p == 0:
        raise BadReduction(f"leading coefficient of F vanishes mod {p}")

    def red(poly):
        return poly.map_coeffs(lambda c: rat_mod_p(Fraction(c), field))

    h_red, f_red = red(C.h), red(C.f)
    try:
        return G2Curve(h_red, f_red)
    except SingularOrWrongGenus as exc:
        raise BadReduction(f"curve degenerates mod {p}") from exc


def g2_count_points(C, extension=1):
    """#C(F_q) for q = p or p^2, counting the smooth-model points.

    Affine part: sum over x of 1 + chi_q(F(x)).  At infinity there is one
    point when deg F = 5, and 1 + chi_q(lc F) points when deg F = 6.
    """
    p = C.base_prime()
    if p is None:
        raise TypeError("count needs a curve over F_p")
    if extension not in (1, 2):
        raise ValueError("extension degree must be 1 or 2")
    F = C.square_completion()
    coeffs = [c.value if isinstance(c, Fp) else c % p for c in F.coeffs]
    if extension == 1:
        return _count_fp(coeffs, p)
    return _count_fp2(coeffs, p)


def _count_fp(coeffs, p):
    chi = chi_table(p)
    rev = coeffs[::-1]
    total = 0
    for x in range(p):
        acc = 0
        for c in rev:
            acc = (acc * x + c) % p
        total += 1 + chi[acc]
    deg = len(coeffs) - 1
    if deg == 5:
        total += 1
    else:
        total += 1 + chi[coeffs[-1]]
    return total


def _count_fp2(coeffs, p):
    """Count over F_{p^2} = F_p(t), t^2 = nr.

    Conjugate points x and x^p give conjugate values F(x), which share
    their quadratic character (chi factors through the norm), so only one
    of each pair is evaluated.  chi_{p^2}(z) = chi_p(norm z).
    """
    nr = least_nonresidue(p)
    chi = chi_table(p)
    rev = coeffs[::-1]
    total = 0
    for x in range(p):  # rational x: F(x) in F_p is a square in F_{p^2} unless 0
        acc = 0
        for c in rev:
            acc = (acc * x + c) % p
        total += 1 if acc == 0 else 2
    for x1 in range(1, (p - 1) // 2 + 1):
        for x0 in range(p):
            a, b = 0, 0
            for c in rev:
                a, b = (a * x0 + b * x1 * nr + c) % p, (a * x1 + b * x0) % p
            n = (a * a - nr * b * b) % p
            total += 2 * (1 + chi[n])
    deg = len(coeffs) - 1
    if deg == 5:
        total += 1
    else:
        total += 2  # lc is a nonzero F_p element, always a square in F_{p^2}
    return total


def jac_order_over_fp(C):
    """#J(F_p) for a genus-2 curve over F_p, via (N1^2 + N2)/2 - p."""
    p = C.base_prime()
    n1 = g2_count_points(C, 1)
    n2 = g2_count_points(C, 2)
    if (n1 * n1 + n2) % 2 != 0:
        raise ArithmeticError(f"parity violation in counts ({n1}, {n2})")
    order = (n1 * n1 + n2) // 2 - p
    _check_weil_interval(order, p)
    return JacOrderRecord(p=p, n1=n1, n2=n2, jac_order=order)


def g2_jacobian_order(C, p):
    """Jacobian order record of the reduction of a rational curve mod p."""
    return jac_order_over_fp(g2_reduce(C, p))


def _check_weil_interval(order, p):
    # (sqrt(p)-1)^4 <= order <= (sqrt(p)+1)^4, compared exactly:
    # (sqrt(p)+-1)^4 = (p^2 + 6p + 1) +- 4 sqrt(p) (p + 1).
    if order < 1:
        raise ArithmeticError(f"Jacobian order {order} < 1 at p={p}")
    mid = p * p + 6 * p + 1
    band_sq = 16 * p * (p + 1) ** 2
    diff = order - mid
    if diff * diff > band_sq:
        raise ArithmeticError(f"Jacobian order {order} outside Weil interval at p={p}")


def good_odd_primes(C, limit):
    """Odd primes p <= limit where this model reduces well (generator)."""
    from .fields import primes_up_to

    for p in primes_up_to(limit):
        if p == 2:
            continue
        try:
            g2_reduce(C, p)
        except (BadPrime, BadReduction):
            continue
        yield p


@lru_cache(maxsize=4096)
def _cached_jac_order(C, p):
    return g2_jacobian_order(C, p)


def lc_is_square_q(F):
    """Is lc(F) a square in Q?  (Only meaningful for curves over Q.)"""
    lc = Fraction(F.leading())
    if lc < 0:
        return False
    return isqrt(lc.numerator) ** 2 == lc.numerator and isqrt(lc.denominator) ** 2 == lc.denominator
