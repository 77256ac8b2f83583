"""Exact rational bounds on classical group orders and ratio sandwiches.

Two layers live here.  order_bounds / simple_order_bounds give rational
lower/upper envelopes for the raw and simple group orders.  sandwich handles
the recurring pattern where a ratio of group orders R is pinned between two
rational functions f(q) < R < g(q) and compared against a rational threshold
h(q): if h < f the underlying subgroup is certainly large, if h > g it
certainly is not, and otherwise the sandwich is inconclusive and exact
arithmetic must decide.
"""

from dataclasses import dataclass
from math import gcd, lcm

from .arith import ExactRatio, parse_prime_power
from .errors import ConstraintViolation, UnknownCase

CERTAINLY_LARGE = "certainly_large"
CERTAINLY_NOT_LARGE = "certainly_not_large"
UNDETERMINED = "undetermined"


def order_bounds(family, n, q):
    """Rational (lower, upper) bounds on |family_n(q)|.

    Families: GL, GU (n >= 2), Sp (n >= 4), SOcirc, SOplus, SOminus
    (n >= 5).  Bounds are strict below; uppers are attained only in the GL
    and GU lines.
    """
    qq = parse_prime_power(q)
    q = qq.q
    x = ExactRatio(1, q)
    if family in ("GL", "GU"):
        if n < 2 or q < 2:
            raise ConstraintViolation(f"{family} bounds need n, q >= 2")
        lead = ExactRatio(q) ** (n * n)
        if family == "GL":
            return ((1 - x - x ** 2) * lead, (1 - x) * (1 - x ** 2) * lead)
        return ((1 + x) * (1 - x ** 2) * lead,
                (1 + x) * (1 - x ** 2) * (1 + x ** 3) * lead)
    if family == "Sp":
        if n < 4:
            raise ConstraintViolation("Sp bounds need n >= 4")
        lead = ExactRatio(q) ** (n * (n + 1) // 2)
        return ((1 - x ** 2 - x ** 4) * lead, (1 - x ** 2) * (1 - x ** 4) * lead)
    if family in ("SOcirc", "SOplus", "SOminus"):
        if n < 5:
            raise ConstraintViolation("SO bounds need n >= 5")
        lead = ExactRatio(q) ** (n * (n - 1) // 2)
        if family == "SOcirc":
            return ((1 - x ** 2 - x ** 4) * lead, (1 - x ** 2) * (1 - x ** 4) * lead)
        c = gcd(2, q)
        if family == "SOplus":
            return (c * (1 - x ** 2 - x ** 4) * (1 - x ** (n // 2)) * lead,
                    c * (1 - x ** 2) * (1 - x ** 4) * lead)
        return (c * (1 - x ** 2 - x ** 4) * lead,
                c * (1 - x ** 2) * (1 - x ** 4) * (1 + x ** (n // 2)) * lead)
    raise UnknownCase(f"no order bounds for family {family!r}")


def simple_order_bounds(g):
    """Rational (lower, upper) bounds on the order of a simple group id."""
    from .orders import parse_group

    if isinstance(g, str):
        g = parse_group(g)
    fam, n, q = g.family, g.n, int(g.q)
    x = ExactRatio(1, q)
    if fam == "PSL":
        if n < 2:
            raise ConstraintViolation("PSL bounds need n >= 2")
        return (ExactRatio(q) ** (n * n - 2),
                (1 - x ** 2) * ExactRatio(q) ** (n * n - 1))
    if fam == "PSU":
        if n < 3:
            raise ConstraintViolation("PSU bounds need n >= 3")
        return ((1 - x) * ExactRatio(q) ** (n * n - 2),
                (1 - x ** 2) * (1 + x ** 3) * ExactRatio(q) ** (n * n - 1))
    if fam == "PSp":
        if n < 4:
            raise ConstraintViolation("PSp bounds need n >= 4")
        lead = ExactRatio(q) ** (n * (n + 1) // 2)
        return (lead / (2 * gcd(2, q - 1)), lead)
    if fam == "POmega":
        if n < 7:
            raise ConstraintViolation("orthogonal simple bounds need n >= 7")
        lead = ExactRatio(q) ** (n * (n - 1) // 2)
        return (lead / (4 * gcd(2, n)), lead)
    raise UnknownCase(f"no simple order bounds for {g}")


def omega_upper(n, eps, q):
    """Upper bound q^(n(n-1)/2)/(2,q-1) on |Omega_n^eps(q)|, n >= 2.

    Not valid for (n, eps) = (2, -), where the group is cyclic of order
    (q+1)/(2,q-1) and exceeds the would-be bound.
    """
    q = int(parse_prime_power(q))
    if n == 2 and eps == "-":
        raise ConstraintViolation("the bound fails for Omega_2^-")
    return ExactRatio(q) ** (n * (n - 1) // 2) / gcd(2, q - 1)


@dataclass(frozen=True)
class BoundTriple:
    """A sandwich f < R < g together with the threshold h it is tested
    against and the resulting verdict."""

    case: str
    lower: ExactRatio
    upper: ExactRatio
    threshold: ExactRatio
    verdict: str


def _verdict(lower, upper, threshold):
    if threshold < lower:
        return CERTAINLY_LARGE
    if threshold > upper:
        return CERTAINLY_NOT_LARGE
    return UNDETERMINED


def _gl_power_sandwich(x, k):
    """Bounds on |GL_m(q)|^k / |GL_km(q)| with x = 1/q."""
    return ((1 - x - x ** 2) ** k / ((1 - x) * (1 - x ** 2)),
            ((1 - x) * (1 - x ** 2)) ** k / (1 - x - x ** 2))


SANDWICH_CASES = (
    "psl-c2-t3", "psl-c3-r3", "psl-c5-r3",
    "psu-c2-t3", "psu-c3-r3",
    "po-c5-r3", "o8-triality-3d4",
)


def sandwich(case, q, n=None):
    """Evaluate the named ratio sandwich at field size q.

    q is the smaller field parameter (q0) in the field-extension and
    subfield cases.  The psl-c5-r3 case also needs the dimension n to form
    its exact threshold.
    """
    qq = parse_prime_power(q)
    q = qq.q
    e = qq.e
    x = ExactRatio(1, q)

    if case == "psl-c2-t3":
        lower, upper = _gl_power_sandwich(x, 9)
        h = ExactRatio((q - 1) ** 2, 864 * e * e)
    elif case == "psl-c3-r3":
        lower = (1 - x ** 3 - x ** 6) ** 3 / (1 - x - x ** 2)
        upper = (1 - x ** 3) ** 3 * (1 - x ** 6) ** 3 / (1 - x - x ** 2)
        h = ExactRatio((q - 1) ** 2, 108 * e * e)
    elif case == "psl-c5-r3":
        if n is None:
            raise ConstraintViolation("psl-c5-r3 needs the dimension n")
        lower = (1 - x - x ** 2) ** 3 / ((1 - x ** 3) * (1 - x ** 6))
        upper = (1 - x) ** 3 * (1 - x ** 2) ** 3 / (1 - x ** 3 - x ** 6)
        big = q ** 3
        d = gcd(n, big - 1)
        s = gcd(q - 1, (big - 1) // d)
        c = (big - 1) // lcm(q - 1, (big - 1) // d)
        # threshold derived from |H0| = s/(q-1) * |PGL_n(q)| on the small
        # field and the outer contribution 2*log_p(q^3)*d/c of the host
        h = ExactRatio((q - 1) ** 6 * c * c,
                       36 * e * e * d ** 3 * s ** 3 * (big - 1))
    elif case == "psu-c2-t3":
        lower = (1 + x) ** 8 * (1 - x ** 2) ** 9
        upper = (1 + x) ** 8 / (1 - x ** 2)
        h = ExactRatio((q + 1) ** 2, 864 * e * e)
    elif case == "psu-c3-r3":
        lower = (1 + x ** 3) ** 3 * (1 - x ** 6) ** 3 / (1 + x)
        upper = (1 + x ** 3) ** 3 / ((1 + x) * (1 - x ** 2))
        h = ExactRatio((q + 1) ** 2, 108 * e * e)
    elif case == "po-c5-r3":
        lower = (1 - x ** 2 - x ** 4) ** 3 / (1 - x ** 6)
        upper = (1 - x ** 2) ** 3 / (1 - x ** 6 - x ** 12)
        # the 1/16 odd-characteristic ratio factor and the minimum possible
        # outer contribution are folded into the threshold
        h = ExactRatio(1, 36 * e * e) if q % 2 == 0 else ExactRatio(1, 9 * e * e)
    elif case == "o8-triality-3d4":
        lower = (1 - x ** 12) ** 2 * (1 - x ** 6) ** 2 / (1 + x ** 2) ** 3
        upper = ((1 - x ** 12) ** 2 * (1 - x ** 6) ** 3
                 / ((1 + x ** 2) ** 3 * (1 - x ** 6 - x ** 12)))
        h = ExactRatio(1)
    else:
        raise UnknownCase(f"unknown sandwich case {case!r}")

    return BoundTriple(case, lower, upper, h, _verdict(lower, upper, h))
