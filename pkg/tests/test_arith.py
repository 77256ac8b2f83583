"""Integer and prime-power arithmetic."""

import pytest

from large_atlas.arith import (
    ExactRatio,
    PrimePower,
    is_prime,
    parse_prime_power,
    prime_powers,
)
from large_atlas.errors import NotAPrimePower


def test_is_prime_small():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_is_prime_larger():
    assert is_prime(7919)
    assert not is_prime(7917)
    assert not is_prime(1)
    assert not is_prime(0)
    assert not is_prime(-7)


@pytest.mark.parametrize("q,p,e", [
    (2, 2, 1), (8, 2, 3), (9, 3, 2), (125, 5, 3), (1024, 2, 10), (169, 13, 2),
])
def test_parse_prime_power(q, p, e):
    pp = parse_prime_power(q)
    assert (pp.p, pp.e) == (p, e)
    assert int(pp) == q
    assert pp.q == q


def test_parse_prime_power_idempotent():
    pp = parse_prime_power(49)
    assert parse_prime_power(pp) == pp


@pytest.mark.parametrize("bad", [0, 1, 6, 12, 100, -8])
def test_parse_prime_power_rejects(bad):
    with pytest.raises(NotAPrimePower):
        parse_prime_power(bad)


def test_prime_powers_range():
    got = [int(q) for q in prime_powers(2, 32)]
    assert got == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]


def test_prime_powers_yields_normalized_objects():
    for q in prime_powers(2, 100):
        assert isinstance(q, PrimePower)
        assert is_prime(q.p)
        assert q.p ** q.e == int(q)


def test_exact_ratio_is_exact():
    # one third plus one sixth is exactly one half, no rounding anywhere
    assert ExactRatio(1, 3) + ExactRatio(1, 6) == ExactRatio(1, 2)
    big = ExactRatio(10) ** 40
    assert big + 1 - big == 1


def test_exact_ratio_comparisons():
    assert ExactRatio(2, 3) < ExactRatio(3, 4)
    assert ExactRatio(7, 7) == 1
