"""Exception hierarchy shared by all modules."""


class G2Error(Exception):
    """Base class for all errors raised by this package."""


class BadPrime(G2Error):
    """The prime divides a denominator (or is otherwise unusable)."""


class BadReduction(G2Error):
    """The model degenerates modulo the given prime."""


class SingularCurve(G2Error):
    """An elliptic model with vanishing discriminant."""


class SingularOrWrongGenus(G2Error):
    """A would-be genus-2 model that is singular or of the wrong genus."""


class PointNotOnCurve(G2Error):
    """A point that does not satisfy the curve equation."""


class NonInvertible(G2Error):
    """Division by a non-unit in a ring or algebra."""


class InvalidDivisor(G2Error):
    """A Mumford triple violating the divisor invariants."""


class OrderMismatch(G2Error):
    """A torsion-order certification check failed."""


class NoGoodPrimes(G2Error):
    """Fewer odd primes of good reduction than the operation requires."""


class TooFewPrimes(G2Error):
    """Not enough common good primes for a trace comparison."""


class OracleMismatch(G2Error):
    """Brute-force group enumeration disagrees with the point-count order."""


class ZeroWeight(G2Error):
    """Weighted model d*y^2 = F with d = 0."""


class DegenerateParameter(G2Error):
    """Family parameter for which the construction degenerates."""


class IdentityPoint(G2Error):
    """The identity of the parameter curve, where the map is undefined."""


class PoleOfMap(G2Error):
    """Evaluation at a pole of the parameter map."""


class PoleEncountered(G2Error):
    """A symbolic identity was evaluated at a pole."""


class ParseError(G2Error):
    """Malformed textual input."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class InvariantError(G2Error):
    """Structurally valid input whose semantic invariants fail."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno
