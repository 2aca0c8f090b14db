"""Divisor class arithmetic on genus-2 Jacobians (Mumford representation).

A class is stored as (u, v, balance): u monic of degree <= 2, v reduced
mod u with u | v^2 + v h - f, and balance counting copies of the place
oo+ in the degree-2 effective part.  For odd-degree models (deg F = 5,
one point at infinity) balance is fixed at 0 and the arithmetic is
classical Cantor composition/reduction.

Even-degree models (deg F = 6) have two points at infinity oo+/oo-,
swapped by the hyperelliptic involution.  A class is

    [ div(u, v) + n*oo+ + (2 - deg u - n)*oo- - (oo+ + oo-) ].

oo+ is the branch where (2y + h)/x^3 tends to s_inf, the distinguished
square root of lc(F) (positive over Q, lexicographically smaller over
F_p).  When lc(F) is not a square the two places are conjugate and only
centrally-balanced classes are rational (deg u even, n = (2 - deg u)/2).

Addition composes the affine parts as usual -- each cancelled pair
{P, iota P} is principal up to oo+ + oo-, so it bumps both infinity
multiplicities -- then reduces with steps based on functions y - W.
The pole orders of y - W at oo+/oo- depend only on whether the cubic
coefficient of 2W + h equals +-s_inf, which makes the infinity
bookkeeping exact.  Degree bounds give: at most one ordinary reduction
step, then at most one branch-matched balance adjustment.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .errors import InvalidDivisor, OracleMismatch, PointNotOnCurve
from .fields import Fp, quad_char
from .genus2 import jac_order_over_fp
from .polys import Poly, poly_xgcd

_ZERO = Poly(())


@dataclass(frozen=True)
class MumfordDiv:
    """Canonical Mumford triple (u, v, balance)."""

    u: Poly
    v: Poly
    balance: int = 0

    def __repr__(self):
        return f"mumford {list(self.u.coeffs)} {list(self.v.coeffs)} {self.balance}"


# --------------------------------------------------------------------------
# per-curve infinity data


@lru_cache(maxsize=1024)
def _branch_data(C):
    """(even, split, s_inf, vplus) for a curve; cached per curve.

    vplus is the unique cubic with deg(vplus^2 + vplus*h - f) <= 2 whose
    branch at infinity matches oo+ (only for split even models).
    """
    F = C.square_completion()
    if F.degree == 5:
        return (False, False, None, None)
    lc = F.leading()
    p = C.base_prime()
    if p is None:
        lcq = Fraction(lc)
        if lcq < 0:
            return (True, False, None, None)
        rn, rd = isqrt(lcq.numerator), isqrt(lcq.denominator)
        if rn * rn != lcq.numerator or rd * rd != lcq.denominator:
            return (True, False, None, None)
        s_inf = Fraction(rn, rd)
    else:
        root = None
        for r in range((p + 1) // 2):
            if r * r % p == lc.value:
                root = r
                break
        if root is None:
            return (True, False, None, None)
        # deterministic representative: the numerically smaller of r, p-r
        s_inf = lc.field(min(root, (p - root) % p))
    vplus = _principal_part(C, s_inf)
    return (True, True, s_inf, vplus)


def _principal_part(C, s_inf):
    """The cubic w with lc3(2w + h) = s_inf and deg(w^2 + wh - f) <= 2."""
    h, f = C.h, C.f
    half = 1 / (s_inf - s_inf + 2)  # 1/2 in the coefficient field
    c3 = (s_inf - h[3]) * half
    w = Poly((0, 0, 0, 1)) * c3
    for k in (5, 4, 3):
        nw = w * w + w * h - f
        coeff = nw[k]
        w = w + Poly.x_power(k - 3, 1) * (-(coeff / s_inf))
    nw = w * w + w * h - f
    assert nw.degree <= 2
    return w


def identity(C):
    """The identity class of Jac(C)."""
    even = C.square_completion().degree == 6
    return MumfordDiv(Poly((1,)), _ZERO, 1 if even else 0)


def validate_divisor(C, D):
    """Raise InvalidDivisor unless D is a canonical class representative."""
    u, v, n = D.u, D.v, D.balance
    if u.is_zero() or u.leading() != 1:
        raise InvalidDivisor("u must be monic")
    if u.degree > 2:
        raise InvalidDivisor("deg u must be <= 2")
    if not v.is_zero() and v.degree >= max(u.degree, 1):
        raise InvalidDivisor("v must be reduced mod u")
    if u.degree == 0 and not v.is_zero():
        raise InvalidDivisor("v must vanish when u = 1")
    if not (v * v + v * C.h - C.f) % u == _ZERO:
        raise InvalidDivisor("u does not divide v^2 + v h - f")
    even, split, _, _ = _branch_data(C)
    if not even:
        if n != 0:
            raise InvalidDivisor("odd-degree models carry no balance")
        return
    if not 0 <= n <= 2 - u.degree:
        raise InvalidDivisor(f"balance {n} out of range for deg u = {u.degree}")
    if not split:
        if u.degree % 2 != 0 or 2 * n != 2 - u.degree:
            raise InvalidDivisor(
                "with non-square lc(F) only centrally balanced classes are rational"
            )


def negate(C, D):
    """Inverse class: v -> (-h - v) mod u, balance mirrored across infinity."""
    u = D.u
    v = (-(C.h + D.v)) % u if u.degree > 0 else _ZERO
    even, _, _, _ = _branch_data(C)
    n = 2 - u.degree - D.balance if even else 0
    return MumfordDiv(u, v, n)


# --------------------------------------------------------------------------
# group law


def _compose(C, D1, D2):
    """Cantor composition of affine parts.

    Returns (U, V, cancels): the semi-reduced sum and the number of
    conjugate pairs {P, iota P} cancelled along the way.
    """
    u1, v1, u2, v2 = D1.u, D1.v, D2.u, D2.v
    if u1.degree == 0:
        return u2, v2, 0
    if u2.degree == 0:
        return u1, v1, 0
    g1, e1, e2 = poly_xgcd(u1, u2)
    g, c1, c2 = poly_xgcd(g1, v1 + v2 + C.h)
    s1, s2, s3 = c1 * e1, c1 * e2, c2
    U = (u1 * u2).exact_div(g * g)
    V = (s1 * (u1 * v2) + s2 * (u2 * v1) + s3 * (v1 * v2 + C.f)).exact_div(g) % U
    return U, V, g.degree


def _step(C, U, V, N, branch):
    """One reduction step using the function y - W, W = V mod U lifted.

    branch = 0 takes W = V; branch = +-1 lifts W to match the oo+/oo-
    branch at infinity (split models only).  Returns the new (U, V, N)
    with N the running multiplicity of oo+ (level fixed by the caller).
    """
    h, f = C.h, C.f
    even, split, s_inf, vplus = _branch_data(C)
    if branch == 0:
        W = V
    else:
        if not split:
            raise AssertionError("branch-matched step on a non-split model")
        vb = vplus if branch > 0 else (-(h + vplus))
        W = vb + ((V - vb) % U) if U.degree > 0 else vb
    NW = W * W + W * h - f
    Unew = NW.exact_div(U).monic()
    if even:
        T3 = 2 * W[3] + h[3]
        if split and T3 == s_inf:
            aplus = NW.degree - 3
        else:
            aplus = 3
        Nnew = N + aplus - Unew.degree
    else:
        Nnew = N
    Vnew = (-(h + W)) % Unew if Unew.degree > 0 else _ZERO
    return Unew, Vnew, Nnew


def jac_add(C, D1, D2):
    """Group law on divisor classes; deterministic canonical output."""
    validate_divisor(C, D1)
    validate_divisor(C, D2)
    even, split, _, _ = _branch_data(C)
    U, V, cancels = _compose(C, D1, D2)
    if not even:
        while U.degree > 2:
            U, V, _ = _step(C, U, V, 0, 0)
        return MumfordDiv(U, V, 0)
    # class = div(U,V) + N oo+ + M oo- - 2(oo+ + oo-), M = 4 - deg U - N
    N = D1.balance + D2.balance + cancels
    while U.degree > 2:
        U, V, N = _step(C, U, V, N, 0 if U.degree >= 4 else +1)
    if N - 1 < 0:
        U, V, N = _step(C, U, V, N, -1)
    elif (4 - U.degree - N) - 1 < 0:
        U, V, N = _step(C, U, V, N, +1)
    n = N - 1
    if not (U.degree <= 2 and 0 <= n <= 2 - U.degree):
        raise AssertionError(f"reduction failed to canonicalize ({U.degree}, {n})")
    return MumfordDiv(U, V, n)


def jac_scalar_mul(C, k, D):
    """k*D by double-and-add (negation handles k < 0)."""
    if k < 0:
        return jac_scalar_mul(C, -k, negate(C, D))
    result = identity(C)
    base = D
    while k:
        if k & 1:
            result = jac_add(C, result, base)
        base = jac_add(C, base, base)
        k >>= 1
    return result


def jac_element_order(C, D, group_order):
    """Exact order of D given the group order (trial-division factoring)."""
    validate_divisor(C, D)
    order = group_order
    for q in _prime_factors(group_order):
        while order % q == 0:
            cand = order // q
            if jac_scalar_mul(C, cand, D) == identity(C):
                order = cand
            else:
                break
    return order


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# --------------------------------------------------------------------------
# divisors from points


def involute(C, pt):
    """Image (x, -y - h(x)) under the hyperelliptic involution."""
    x, y = pt
    return (x, -y - C.h.evaluate(x))


def divisor_from_points(C, pts):
    """Class of sum(P_i) minus the balancing divisor at infinity.

    Accepts up to two affine points.  A pair {P, iota P} is principal up
    to infinity, so it collapses to the identity class rather than
    erroring.  Single points balance with one copy of oo+.
    """
    even, split, _, _ = _branch_data(C)
    one = _one_of(C)
    for x, y in pts:
        if not C.contains(x, y):
            raise PointNotOnCurve(f"({x},{y}) not on curve")
    if len(pts) > 2:
        raise InvalidDivisor("at most two points")
    if not pts:
        return identity(C)
    if len(pts) == 1:
        (x0, y0) = pts[0]
        if even and not split:
            raise InvalidDivisor(
                "single-point classes are not rational when lc(F) is not a square"
            )
        u = Poly((-x0, one))
        D = MumfordDiv(u, Poly((y0,)) if y0 != 0 else _ZERO, 1 if even else 0)
        validate_divisor(C, D)
        return D
    (x1, y1), (x2, y2) = pts
    if x1 == x2:
        if y1 != y2:  # iota-conjugate pair: principal up to infinity
            return identity(C)
        tangent_denom = 2 * y1 + C.h.evaluate(x1)
        if tangent_denom == 0:  # doubled Weierstrass point: also cancels
            return identity(C)
        slope = (C.f.derivative().evaluate(x1) - C.h.derivative().evaluate(x1) * y1) / tangent_denom
        u = Poly((-x1, one)) * Poly((-x1, one))
        v = Poly((y1 - slope * x1, slope)) % u
    else:
        u = Poly((-x1, one)) * Poly((-x2, one))
        slope = (y2 - y1) / (x2 - x1)
        v = Poly((y1 - slope * x1, slope)) % u
    D = MumfordDiv(u, v, 0)
    validate_divisor(C, D)
    return D


def _one_of(C):
    p = C.base_prime()
    if p is None:
        return Fraction(1)
    for c in C.f.coeffs + C.h.coeffs:
        if isinstance(c, Fp):
            return c.field(1)
    raise TypeError("cannot infer coefficient ring")


def reduce_divisor(C, D, p, C_red=None):
    """Reduce a rational divisor class mod an odd good prime.

    Coefficients of u, v must be p-integral (BadPrime otherwise).  The
    balance count follows the branch labelling: if the distinguished
    square root of lc(F) over Q reduces to the one chosen mod p the
    balance is kept, otherwise it mirrors.  Central balances (the only
    rational ones when lc(F) is not a rational square) are unaffected.
    """
    from .fields import PrimeField, rat_mod_p
    from .genus2 import g2_reduce

    validate_divisor(C, D)
    field = PrimeField(p)
    if C_red is None:
        C_red = g2_reduce(C, p)
    u = D.u.map_coeffs(lambda c: rat_mod_p(Fraction(c), field))
    v = D.v.map_coeffs(lambda c: rat_mod_p(Fraction(c), field))
    even_q, split_q, s_q, _ = _branch_data(C)
    n = D.balance
    if even_q and split_q:
        _, split_p, s_p, _ = _branch_data(C_red)
        if not split_p:
            raise AssertionError("square lc(F) cannot reduce to a non-square")
        if rat_mod_p(s_q, field) != s_p:
            n = 2 - D.u.degree - n
    D_red = MumfordDiv(u, v, n)
    validate_divisor(C_red, D_red)
    return D_red


# --------------------------------------------------------------------------
# brute-force oracle


@dataclass(frozen=True)
class ClassGroupTable:
    """All canonical classes over a tiny field, with a full addition table."""

    q: int
    elements: tuple
    table: tuple  # table[i][j] = index of elements[i] + elements[j]

    def index(self, D):
        return self.elements.index(D)

    def add(self, i, j):
        return self.table[i][j]


def enumerate_divisors(C):
    """All canonical Mumford triples on a curve over F_p (p small)."""
    p = C.base_prime()
    if p is None:
        raise TypeError("enumeration needs a curve over F_p")
    field = _one_of(C).field
    even, split, _, _ = _branch_data(C)
    h, f = C.h, C.f
    out = []

    def balances(du):
        if not even:
            return (0,)
        if split:
            return tuple(range(0, 2 - du + 1))
        return ((2 - du) // 2,) if du % 2 == 0 else ()

    for n in balances(0):
        out.append(MumfordDiv(Poly((1,)), _ZERO, n))
    elems = field.elements()
    for du, u_iter in (
        (1, ((Poly((-a, field(1))),) for a in elems)),
        (2, None),
    ):
        if du == 1:
            if not balances(1):
                continue
            for (u,) in u_iter:
                for c in elems:
                    v = Poly((c,)) if c else _ZERO
                    if (v * v + v * h - f) % u == _ZERO:
                        for n in balances(1):
                            out.append(MumfordDiv(u, v, n))
        else:
            for u0 in elems:
                for u1 in elems:
                    u = Poly((u0, u1, field(1)))
                    for v0 in elems:
                        for v1 in elems:
                            v = Poly((v0, v1))
                            if (v * v + v * h - f) % u == _ZERO:
                                for n in balances(2):
                                    out.append(MumfordDiv(u, v, n))
    return out


def class_group_bruteforce(C):
    """Enumerate Jac(C)(F_p) and tabulate the full group law.

    The element list comes from raw divisibility enumeration, the
    expected cardinality from point counting via the zeta identity; a
    mismatch raises OracleMismatch.
    """
    p = C.base_prime()
    if p is None or p > 7:
        raise ValueError("brute-force oracle is limited to p in {3, 5, 7}")
    elements = tuple(enumerate_divisors(C))
    expected = jac_order_over_fp(C).jac_order
    if len(elements) != expected:
        raise OracleMismatch(
            f"enumerated {len(elements)} classes but zeta identity gives {expected}"
        )
    index = {D: i for i, D in enumerate(elements)}
    table = []
    for D1 in elements:
        row = []
        for D2 in elements:
            s = jac_add(C, D1, D2)
            if s not in index:
                raise OracleMismatch(f"sum {s} left the enumerated class set")
            row.append(index[s])
        table.append(tuple(row))
    return ClassGroupTable(q=p, elements=elements, table=tuple(table))
