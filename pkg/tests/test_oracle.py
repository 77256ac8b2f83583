"""Brute-force matrix counts against the closed-form orders.

These enumerations are tiny but completely independent of the formulas:
they build the actual finite fields and count invertible matrices.
"""

import pytest

from large_atlas import oracle
from large_atlas.orders import gl_order, gu_order, sl_order, sp_order

SMALL_Q = (2, 3, 4, 5)


@pytest.mark.parametrize("q", SMALL_Q)
@pytest.mark.parametrize("n", (1, 2, 3))
def test_gl_count_matches_formula(n, q):
    assert oracle.count_gl(n, q) == gl_order(n, q)


@pytest.mark.parametrize("q", SMALL_Q)
@pytest.mark.parametrize("n", (1, 2, 3))
def test_sl_count_matches_formula(n, q):
    assert oracle.count_gl(n, q, det_one=True) == sl_order(n, q)


@pytest.mark.parametrize("q0", (2, 3))
@pytest.mark.parametrize("n", (1, 2))
def test_gu_count_matches_formula(n, q0):
    assert oracle.count_gu(n, q0) == gu_order(n, q0)
    assert oracle.count_gu(n, q0, det_one=True) == gu_order(n, q0) // (q0 + 1)


@pytest.mark.parametrize("q", SMALL_Q)
def test_sp2_count_is_sl2(q):
    assert oracle.count_sp2(q) == sp_order(2, q) == sl_order(2, q)


def test_field_arithmetic_is_a_field():
    f4 = oracle.SmallField(4)
    nonzero = [a for a in f4.elements if a != 0]
    assert len(nonzero) == 3
    for a in nonzero:
        # every nonzero element has an inverse
        assert any(f4.mul(a, b) == 1 for b in nonzero)
