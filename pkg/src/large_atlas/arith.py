"""Exact integer and rational arithmetic helpers.

Everything in this package is computed over arbitrary-precision integers and
exact rationals.  No floats are used anywhere: quantities that are naturally
logarithmic (field degrees, factorial growth) are restated as integer power
comparisons by the callers.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd, isqrt, lcm, prod

from .errors import NotAPrimePower

__all__ = [
    "ExactRatio",
    "PrimePower",
    "parse_prime_power",
    "is_prime",
    "prime_powers",
    "factorial",
    "gcd",
    "lcm",
    "prod",
]

# Exact rational numbers.  fractions.Fraction already guarantees the contract
# we need: lowest terms, positive denominator, exact comparison and hashing.
ExactRatio = Fraction


def is_prime(n):
    """Deterministic primality by trial division (fine for the sizes here)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f <= isqrt(n):
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True, order=True)
class PrimePower:
    """A prime power q = p^e, kept normalized."""

    p: int
    e: int

    @property
    def q(self):
        return self.p ** self.e

    def __int__(self):
        return self.q

    def __str__(self):
        return str(self.q)


def parse_prime_power(q):
    """Factor q as p^e or raise NotAPrimePower.

    >>> parse_prime_power(25)
    PrimePower(p=5, e=2)
    """
    if isinstance(q, PrimePower):
        return q
    q = int(q)
    if q < 2:
        raise NotAPrimePower(f"{q} is not a prime power")
    # Smallest prime factor by trial division; q = p^e must then hold.
    p = None
    if q % 2 == 0:
        p = 2
    else:
        f = 3
        while f <= isqrt(q):
            if q % f == 0:
                p = f
                break
            f += 2
        if p is None:
            return PrimePower(q, 1)  # q itself is prime
    e = 0
    rest = q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise NotAPrimePower(f"{q} is not a prime power")
    return PrimePower(p, e)


def prime_powers(lo, hi):
    """All prime powers q with lo <= q <= hi, ascending, as PrimePower."""
    out = []
    for q in range(max(lo, 2), hi + 1):
        try:
            out.append(parse_prime_power(q))
        except NotAPrimePower:
            pass
    return out
