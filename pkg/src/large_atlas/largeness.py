"""The largeness predicate: |G0| <= |H0|^3 |O|^2, decided exactly.

A subgroup H of an almost simple group G with socle G0 is large when
|H|^3 >= |G|.  Writing H0 = H intersect G0 and O for the outer part of G
realized by H, that inequality follows from |G0| <= |H0|^3 |O|^2, and the
variant used throughout the tables replaces O by the outer classes O1 that
stabilize the G0-class of H0.  Everything here is integer arithmetic; no
verdict ever depends on floating point.
"""

from dataclasses import dataclass

from .arith import ExactRatio
from .errors import ConstraintViolation

EXACT = "exact"
BOUND_ONLY = "bound_only"
FORCED_LARGE = "forced_large"
EXCLUDED_BY_BOUND = "excluded_by_bound"


@dataclass(frozen=True)
class LargenessVerdict:
    """Outcome of one largeness test, with both sides of the inequality."""

    g0_order: int
    h0_order: int
    o_order: int
    lhs: int
    rhs: int
    is_large: bool
    margin: ExactRatio
    mode: str = EXACT

    def __str__(self):
        rel = "<=" if self.is_large else ">"
        return (f"|G0| = {self.lhs} {rel} {self.rhs} = |H0|^3 |O|^2"
                f" ({'large' if self.is_large else 'not large'}, {self.mode})")


def _verdict(g0_order, h0_order, o_order, mode):
    if g0_order <= 0 or h0_order <= 0 or o_order <= 0:
        raise ConstraintViolation("orders must be positive")
    rhs = h0_order ** 3 * o_order ** 2
    return LargenessVerdict(
        g0_order=g0_order,
        h0_order=h0_order,
        o_order=o_order,
        lhs=g0_order,
        rhs=rhs,
        is_large=g0_order <= rhs,
        margin=ExactRatio(rhs, g0_order),
        mode=mode,
    )


def is_large(g0_order, h0_order, o_order=1):
    """Exact test of |G0| <= |H0|^3 |O|^2 from integer orders."""
    return _verdict(int(g0_order), int(h0_order), int(o_order), EXACT)


def is_large_h1(g0_order, entry):
    """Largeness test for a catalog entry, honoring bound-only rows.

    Entries that store only an upper bound on |H0| can certify a negative
    answer (mode excluded_by_bound: the overestimate already fails, so the
    true order fails too) and entries storing a lower bound can certify a
    positive one (mode forced_large); in the remaining situations the
    verdict keeps its literal truth value but is flagged bound_only so
    callers know it settles nothing.
    """
    g0_order = int(g0_order)
    kind = getattr(entry, "bound", EXACT)
    v = _verdict(g0_order, entry.h0_order, entry.o1_order, EXACT)
    if kind == EXACT:
        return v
    if kind == "upper":
        mode = EXCLUDED_BY_BOUND if not v.is_large else BOUND_ONLY
    elif kind == "lower":
        mode = FORCED_LARGE if v.is_large else BOUND_ONLY
    else:
        raise ConstraintViolation(f"unknown bound kind {kind!r}")
    return _verdict(g0_order, entry.h0_order, entry.o1_order, mode)


def decisive(verdict):
    """Whether a verdict from is_large_h1 is trustworthy as stated.

    Exact entries are always decisive.  Upper bounds decide only negative
    answers; lower bounds only positive ones.  A bound_only verdict is
    never decisive.
    """
    return verdict.mode in (EXACT, FORCED_LARGE, EXCLUDED_BY_BOUND)
