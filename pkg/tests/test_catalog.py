"""Subgroup catalog entries: orders, outer contributions, constraints."""

import pytest

from large_atlas import catalog
from large_atlas.arith import gcd
from large_atlas.errors import ConstraintViolation, UnsupportedGroup
from large_atlas.largeness import is_large_h1
from large_atlas.orders import MINUS, PLUS, order, parse_group, psl


def test_psl_c2_wreath_entry():
    # GL(1,5) wr S4 inside PSL(4,5): (q-1)^3 t! / d = 64 * 24 / 4
    e = catalog.psl_c2(4, 5, 1, 4)
    assert e.type_descriptor == "GL(1,5) wr S4"
    assert e.h0_order == 384
    assert e.o1_order == 8
    assert e.aschbacher_class == "C2"
    v = is_large_h1(order(psl(4, 5)), e)
    assert v.rhs == 3623878656
    assert not v.is_large


def test_psl_c2_rejects_bad_split():
    with pytest.raises(ConstraintViolation):
        catalog.psl_c2(4, 5, 1, 3)  # 4 != 1 * 3


def test_psl_c3_field_extension_entry():
    # GL(1,q^3).3 inside PSL(3,q)
    e = catalog.psl_c3(3, 4, 1, 3)
    d = gcd(3, 4 - 1)
    assert e.h0_order == (4 ** 3 - 1) * 3 // (d * (4 - 1))
    assert e.aschbacher_class == "C3"


def test_psl_c5_subfield_entry():
    # PSL(2,2) inside PSL(2,8) has order 6
    e = catalog.psl_c5(2, 8, 3)
    assert e.h0_order == 6
    with pytest.raises(ConstraintViolation):
        catalog.psl_c5(2, 8, 2)  # 2 does not divide the field degree 3


def test_psl_c6_rows():
    rows = catalog.psl_c6(2, 5)
    assert [(r.name, r.h0_order) for r in rows] == [("A4", 12)]
    rows = catalog.psl_c6(2, 7)
    assert any(r.name == "S4" and r.h0_order == 24 for r in rows)


def test_psl_c6_needs_prime_field():
    with pytest.raises(ConstraintViolation):
        catalog.psl_c6(2, 25)


def test_orthogonal_outer_contribution_never_counts_triality():
    # the eight-dimensional plus-type host has |Out| = 6 (or 24 for square q)
    # but the geometric families only ever see the degree-two part
    e = catalog.pso_c5(8, PLUS, 27, 3)
    assert e.o1_order == 2 * gcd(4, 27 ** 4 - 1) * 3  # 2 d e with e = 3
    e = catalog.pso_c2_go_wr(8, PLUS, 5, 2, MINUS, 4)
    assert e.o1_order == 2 * gcd(4, 5 ** 4 - 1)


def test_go_wreath_constraints():
    with pytest.raises((ConstraintViolation, UnsupportedGroup)):
        catalog.pso_c2_go_wr(8, PLUS, 5, 3, MINUS, 4)  # 3 * 4 != 8


def test_o8_triality_candidates_are_labeled():
    items = catalog.o8_triality_candidates(5)
    labels = [dict(e.params)["item"] for e in items]
    assert labels == sorted(labels, key="i ii iii iv v vi vii viii ix x xi xii xiii".split().index)
    assert "ii" in labels and "viii" in labels and "xiii" in labels
    byl = {dict(e.params)["item"]: e for e in items}
    assert byl["ii"].type_descriptor == "G2(5)"
    assert byl["viii"].h0_order == 5408  # (2(q^2+1)/d)^2 * 2d * 2 at q = 5
    assert byl["xiii"].h0_order == 29120  # Sz(8), only at q = 5


def test_o8_triality_q2_has_no_odd_characteristic_rows():
    items = catalog.o8_triality_candidates(2)
    labels = {dict(e.params)["item"] for e in items}
    assert "iv" not in labels   # needs odd prime q
    assert "xii" not in labels  # needs odd q


def test_sp4_graph_candidates_need_even_q_at_least_4():
    with pytest.raises(UnsupportedGroup):
        catalog.sp4_graph_candidates(3)
    with pytest.raises(UnsupportedGroup):
        catalog.sp4_graph_candidates(2)
    assert catalog.sp4_graph_candidates(4)


def test_table_entries_match_host():
    rows = catalog.table_entries(parse_group("PSL(5,3)"))
    assert [(r.name, r.h0_order) for r in rows] == [("M11", 7920)]


def test_candidates_cover_expected_classes():
    got = {e.aschbacher_class for e in catalog.candidates(parse_group("PSL(2,7)"))}
    assert got == {"C1", "C2", "C3", "C6"}


def test_exceptional_candidates_dispatch():
    assert catalog.exceptional_candidates(parse_group("POmega+(8,3)"), "o8_triality")
    with pytest.raises(UnsupportedGroup):
        catalog.exceptional_candidates(parse_group("PSL(3,3)"), "o8_triality")


def test_collection_a_host_map():
    assert str(catalog.collection_a_host(10, 2)) == "PSp(8,2)"
    assert str(catalog.collection_a_host(16, 2)) == "POmega+(14,2)"
    assert str(catalog.collection_a_host(12, 2)) == "POmega-(10,2)"
    with pytest.raises(ConstraintViolation):
        catalog.collection_a_host(4, 2)
