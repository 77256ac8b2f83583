"""Candidate maximal-subgroup catalog for the simple classical groups.

For each host family (linear, unitary, symplectic, orthogonal) and each
geometric class C1..C8 the catalog can instantiate the candidate subgroups
with their exact orders |H0| and the order |O1| of the outer classes that
stabilize the H0-class.  Rows where only a one-sided bound on |H0| is
available carry bound="upper" or bound="lower" so the largeness engine can
tell decisive verdicts from inconclusive ones.  The module also provides
the permutation-module host map, the two literal tables of almost simple
irreducible candidates, and the candidate lists for the two graph-
automorphism hosts.
"""

from dataclasses import dataclass, replace
from importlib import resources
from math import factorial, gcd, lcm

from .arith import parse_prime_power
from .errors import (ConstraintViolation, DataIntegrityError, UnknownCase,
                     UnsupportedGroup)
from .orders import (CIRC, MINUS, PLUS, GroupId, alt_order, g2_order,
                     gl_order, gu_order, omega_order, order, out_order,
                     parse_group, pgl_order, pgu_order, pomega, psl, psl_order,
                     psp, psp_order, psu, psu_order, sl_order, so_order,
                     sp_order, sporadic_order, su_order, subgroup_name_order,
                     sym_order, sz_order, tri_d4_order)

EXACT = "exact"
UPPER = "upper"
LOWER = "lower"


@dataclass(frozen=True)
class SubgroupEntry:
    """One instantiated candidate subgroup of a given host group."""

    host: GroupId
    aschbacher_class: str
    type_descriptor: str
    params: tuple
    h0_order: int
    o1_order: int
    class_count: int
    bound: str = EXACT
    name: str = ""
    formula: str = ""

    def __post_init__(self):
        if self.h0_order < 1 or self.o1_order < 1 or self.class_count < 1:
            raise ConstraintViolation(f"bad entry numbers for {self.type_descriptor}")


def _require(cond, msg):
    if not cond:
        raise ConstraintViolation(msg)


def _entry(host, klass, desc, params, h0, o1, c=1, bound=EXACT, name="", formula=""):
    return SubgroupEntry(host, klass, desc, tuple(sorted(params.items())),
                         int(h0), int(o1), int(c), bound, name, formula)


# ---------------------------------------------------------------------------
# linear hosts
# ---------------------------------------------------------------------------


def psl_c1(n, q):
    """Point stabilizer; contains a full Sylow p-subgroup, so the stored
    lower bound already certifies largeness."""
    g = psl(n, q)
    q = int(g.q)
    return _entry(g, "C1", "parabolic P1", {}, q ** (n * (n - 1) // 2), 1,
                  bound=LOWER, formula="sylow-p-lower")


def psl_c2(n, q, m, t):
    g = psl(n, q)
    q = int(g.q)
    _require(n == m * t and t >= 2 and m >= 1, "imprimitive type needs n = m*t")
    _require(q >= 5 or m >= 2, "blocks of size 1 need q >= 5")
    _require(q >= 3 or m >= 3, "blocks of size 2 need q >= 3")
    d = gcd(n, q - 1)
    h0 = sl_order(m, q) ** t * (q - 1) ** (t - 1) * factorial(t) // d
    return _entry(g, "C2", f"GL({m},{q}) wr S{t}", {"m": m, "t": t},
                  h0, out_order(g), formula="psl-c2")


def psl_c3(n, q, m, r):
    g = psl(n, q)
    q = int(g.q)
    _require(n == m * r and r >= 2 and _is_prime(r), "field-extension degree must be prime")
    d = gcd(n, q - 1)
    h0 = gl_order(m, q ** r) * r // (d * (q - 1))
    return _entry(g, "C3", f"GL({m},{q}^{r})", {"m": m, "r": r},
                  h0, out_order(g), formula="psl-c3")


def psl_c4(n, q, n1, n2):
    g = psl(n, q)
    q = int(g.q)
    _require(n == n1 * n2 and 2 <= n1 < n2, "tensor type needs n = n1*n2, n1 < n2")
    d = gcd(n, q - 1)
    cc = gcd(gcd(q - 1, n1), n2)
    h0 = sl_order(n1, q) * sl_order(n2, q) * cc // d
    return _entry(g, "C4", f"GL({n1},{q}) (x) GL({n2},{q})", {"n1": n1, "n2": n2},
                  h0, out_order(g) // cc, c=cc, formula="psl-c4")


def psl_c5(n, q, r):
    g = psl(n, q)
    qq = g.q
    _require(qq.e % r == 0 and _is_prime(r), "subfield index must be a prime dividing e")
    q = qq.q
    q0 = qq.p ** (qq.e // r)
    d = gcd(n, q - 1)
    s = gcd(q0 - 1, (q - 1) // d)
    h0 = pgl_order(n, q0) * s // (q0 - 1)
    c = (q - 1) // lcm(q0 - 1, (q - 1) // d)
    return _entry(g, "C5", f"GL({n},{q0})", {"q0": q0, "r": r},
                  h0, out_order(g) // c, c=c, formula="psl-c5")


def psl_c6(n, q):
    """Extraspecial normalizer rows, one tuple of candidates per dimension."""
    g = psl(n, q)
    qq = g.q
    q = qq.q
    _require(qq.e == 1, "extraspecial normalizers need prime fields")
    out = []
    if n == 2:
        if q % 8 in (1, 7):
            out.append(_entry(g, "C6", "2^(1+2).O2-(2)", {}, 24, 1, c=2,
                              name="S4", formula="psl-c6-n2"))
        elif q % 8 in (3, 5) and q > 3:
            out.append(_entry(g, "C6", "2^(1+2).O2-(2)", {}, 12, 2, c=1,
                              name="A4", formula="psl-c6-n2"))
    elif n == 3 and q % 3 == 1:
        h0 = 216 if q % 9 == 1 else 72
        name = "3^2:SL2(3)" if h0 == 216 else "3^2:Q8"
        out.append(_entry(g, "C6", "3^(1+2):Sp2(3)", {}, h0, 2, c=gcd(3, q - 1),
                          name=name, formula="psl-c6-n3"))
    elif n == 4:
        if q % 8 == 5:
            out.append(_entry(g, "C6", "(4 o 2^(1+4)).Sp4(2)", {},
                              16 * alt_order(6), 4, c=2, name="2^4.A6",
                              formula="psl-c6-n4"))
        elif q % 8 == 1:
            out.append(_entry(g, "C6", "(4 o 2^(1+4)).Sp4(2)", {},
                              16 * sym_order(6), 2, c=4, name="2^4.S6",
                              formula="psl-c6-n4"))
    elif n == 8 and q % 4 == 1:
        out.append(_entry(g, "C6", "(4 o 2^(1+6)).Sp6(2)", {},
                          64 * sp_order(6, 2), 2, c=gcd(8, q - 1),
                          name="2^6.Sp6(2)", formula="psl-c6-n8"))
    return out


def psl_c7(n, q, m, t):
    g = psl(n, q)
    q = int(g.q)
    _require(n == m ** t and m >= 3 and t >= 2, "tensor-power type needs n = m^t, m >= 3")
    h0 = sl_order(m, q) ** t * factorial(t)
    return _entry(g, "C7", f"GL({m},{q}) wr S{t} (tensor)", {"m": m, "t": t},
                  h0, out_order(g), bound=UPPER, formula="psl-c7")


def psl_c8(n, q):
    g = psl(n, q)
    qq = g.q
    q = qq.q
    out = []
    if n % 2 == 0 and n >= 4:
        out.append(_entry(g, "C8", f"Sp({n},{q})", {}, psp_order(n, q), 1,
                          bound=LOWER, formula="c8-classical-lower"))
    if q % 2 == 1 and n >= 3:
        eps = CIRC if n % 2 else PLUS
        out.append(_entry(g, "C8", f"GO({n},{q})", {},
                          so_order(n, eps, q) if n % 2 else 2 * omega_order(n, eps, q),
                          1, bound=LOWER, formula="c8-classical-lower"))
    if qq.e % 2 == 0 and n >= 3:
        q0 = qq.p ** (qq.e // 2)
        out.append(_entry(g, "C8", f"GU({n},{q0})", {}, psu_order(n, q0), 1,
                          bound=LOWER, formula="c8-classical-lower"))
    return out


# ---------------------------------------------------------------------------
# unitary hosts
# ---------------------------------------------------------------------------


def psu_c1(n, q):
    g = psu(n, q)
    q = int(g.q)
    return _entry(g, "C1", "subspace stabilizer", {}, q ** (n * (n - 1) // 2), 1,
                  bound=LOWER, formula="sylow-p-lower")


def psu_c2_wr(n, q, m, t):
    g = psu(n, q)
    q = int(g.q)
    _require(n == m * t and t >= 2 and m >= 1, "imprimitive type needs n = m*t")
    d = gcd(n, q + 1)
    h0 = gu_order(m, q) ** t * factorial(t) // (d * (q + 1))
    return _entry(g, "C2", f"GU({m},{q}) wr S{t}", {"m": m, "t": t},
                  h0, out_order(g), formula="psu-c2")


def psu_c2_gl(n, q):
    g = psu(n, q)
    q = int(g.q)
    _require(n % 2 == 0, "the GL-type imprimitive subgroup needs even n")
    d = gcd(n, q + 1)
    h0 = gl_order(n // 2, q * q) * 2 // (d * (q + 1))
    return _entry(g, "C2", f"GL({n // 2},{q}^2).2", {}, h0, out_order(g),
                  formula="psu-c2-gl")


def psu_c3(n, q, m, r):
    g = psu(n, q)
    q = int(g.q)
    _require(n == m * r and r >= 3 and r % 2 == 1 and _is_prime(r),
             "unitary field extension needs an odd prime degree")
    d = gcd(n, q + 1)
    h0 = gu_order(m, q ** r) * r // (d * (q + 1))
    return _entry(g, "C3", f"GU({m},{q}^{r})", {"m": m, "r": r},
                  h0, out_order(g), formula="psu-c3")


def psu_c4(n, q, n1, n2):
    g = psu(n, q)
    q = int(g.q)
    _require(n == n1 * n2 and 2 <= n1 < n2, "tensor type needs n = n1*n2, n1 < n2")
    d = gcd(n, q + 1)
    cc = gcd(gcd(q + 1, n1), n2)
    h0 = su_order(n1, q) * su_order(n2, q) * cc * cc // d
    return _entry(g, "C4", f"GU({n1},{q}) (x) GU({n2},{q})", {"n1": n1, "n2": n2},
                  h0, out_order(g) // max(cc, 1), c=max(cc, 1),
                  bound=UPPER, formula="psu-c4")


def psu_c5_subfield(n, q, r):
    g = psu(n, q)
    qq = g.q
    _require(qq.e % r == 0 and r % 2 == 1 and _is_prime(r),
             "unitary subfield index must be an odd prime dividing e")
    q = qq.q
    q0 = qq.p ** (qq.e // r)
    d = gcd(n, q + 1)
    s = gcd(q0 + 1, (q + 1) // d)
    h0 = pgu_order(n, q0) * s // (q0 + 1)
    c = (q + 1) // lcm(q0 + 1, (q + 1) // d)
    return _entry(g, "C5", f"GU({n},{q0})", {"q0": q0, "r": r},
                  h0, out_order(g) // c, c=c, formula="psu-c5")


def psu_c5_form(n, q, kind):
    g = psu(n, q)
    q = int(g.q)
    if kind == "Sp":
        _require(n % 2 == 0, "symplectic form subgroup needs even n")
        return _entry(g, "C5", f"Sp({n},{q})", {}, psp_order(n, q), 1,
                      bound=LOWER, formula="c8-classical-lower")
    _require(q % 2 == 1, "orthogonal form subgroup needs odd q")
    eps = CIRC if n % 2 else kind
    return _entry(g, "C5", f"GO{'' if eps == CIRC else eps}({n},{q})", {},
                  so_order(n, eps, q), 1, bound=LOWER, formula="c8-classical-lower")


def psu_c6(n, q):
    g = psu(n, q)
    qq = g.q
    q = qq.q
    _require(qq.e == 1, "extraspecial normalizers need prime fields")
    out = []
    if n == 3 and q % 3 == 2:
        cc = gcd(9, q + 1) // 3
        out.append(_entry(g, "C6", "3^(1+2):Sp2(3)", {}, 72 * cc,
                          2 * gcd(3, q + 1) // cc, c=cc,
                          name="3^2:Q8" if cc == 1 else "3^2:Q8.3",
                          formula="psu-c6-n3"))
    elif n == 4:
        if q % 8 == 3:
            out.append(_entry(g, "C6", "(4 o 2^(1+4)).Sp4(2)", {},
                              16 * alt_order(6), 4, c=2, name="2^4.A6",
                              formula="psu-c6-n4"))
        elif q % 8 == 7:
            out.append(_entry(g, "C6", "(4 o 2^(1+4)).Sp4(2)", {},
                              16 * sym_order(6), 2, c=4, name="2^4.S6",
                              formula="psu-c6-n4"))
    elif n >= 8 and n & (n - 1) == 0 and q % 4 == 3:
        m = n.bit_length() - 1
        out.append(_entry(g, "C6", f"(4 o 2^(1+{2 * m})).Sp{2 * m}(2)", {},
                          2 ** (2 * m) * sp_order(2 * m, 2), 2,
                          name=f"2^{2 * m}.Sp{2 * m}(2)", formula="psu-c6-n8"))
    return out


def psu_c7(n, q, m, t):
    g = psu(n, q)
    q = int(g.q)
    _require(n == m ** t and m >= 3 and t >= 2, "tensor-power type needs n = m^t, m >= 3")
    _require((m, q) != (3, 2), "the (3,2) tensor-power case does not occur")
    h0 = su_order(m, q) ** t * factorial(t)
    return _entry(g, "C7", f"GU({m},{q}) wr S{t} (tensor)", {"m": m, "t": t},
                  h0, out_order(g), bound=UPPER, formula="psu-c7")


# ---------------------------------------------------------------------------
# symplectic hosts
# ---------------------------------------------------------------------------


def psp_c1(n, q):
    g = psp(n, q)
    q = int(g.q)
    return _entry(g, "C1", "subspace stabilizer", {}, q ** ((n // 2) ** 2), 1,
                  bound=LOWER, formula="sylow-p-lower")


def psp_c2_gl(n, q):
    g = psp(n, q)
    q = int(g.q)
    d = gcd(2, q - 1)
    return _entry(g, "C2", f"GL({n // 2},{q}).2", {},
                  2 * gl_order(n // 2, q) // d, 1, bound=LOWER,
                  formula="psp-c2-gl-lower")


def psp_c2_wr(n, q, m, t):
    g = psp(n, q)
    qq = g.q
    q = qq.q
    _require(n == m * t and t >= 2 and m >= 2 and m % 2 == 0,
             "imprimitive type needs n = m*t with even m")
    _require((m, q) != (2, 2), "blocks Sp2(2) do not occur")
    d = gcd(2, q - 1)
    h0 = sp_order(m, q) ** t * factorial(t) // d
    return _entry(g, "C2", f"Sp({m},{q}) wr S{t}", {"m": m, "t": t},
                  h0, d * qq.e, c=out_order(g) // (d * qq.e), formula="psp-c2")


def psp_c3(n, q, m, r):
    g = psp(n, q)
    qq = g.q
    q = qq.q
    _require(n == m * r and m % 2 == 0 and _is_prime(r), "extension degree must be prime")
    d = gcd(2, q - 1)
    h0 = r * sp_order(m, q ** r) // d
    return _entry(g, "C3", f"Sp({m},{q}^{r})", {"m": m, "r": r},
                  h0, d * qq.e, formula="psp-c3")


def psp_c3_gu(n, q):
    g = psp(n, q)
    q = int(g.q)
    d = gcd(2, q - 1)
    return _entry(g, "C3", f"GU({n // 2},{q})", {}, gu_order(n // 2, q) // d,
                  1, bound=LOWER, formula="psp-c3-gu-lower")


def psp_c4(n, q, n1, n2, eps):
    g = psp(n, q)
    qq = g.q
    q = qq.q
    _require(q % 2 == 1, "symplectic-orthogonal tensor needs odd q")
    _require(n == n1 * n2 and n1 % 2 == 0 and n1 >= 2 and n2 >= 3,
             "tensor type needs n = n1*n2 with n1 even, n2 >= 3")
    pgo = go_order_proj(n2, eps, q)
    h0 = psp_order(n1, q) * pgo * gcd(2, n2)
    return _entry(g, "C4", f"Sp({n1},{q}) (x) GO{eps_tag(eps)}({n2},{q})",
                  {"n1": n1, "n2": n2, "eps": eps}, h0,
                  gcd(2, q - 1) * qq.e, formula="psp-c4")


def psp_c5(n, q, r):
    g = psp(n, q)
    qq = g.q
    _require(qq.e % r == 0 and _is_prime(r), "subfield index must be a prime dividing e")
    q0 = qq.p ** (qq.e // r)
    cc = gcd(gcd(2, qq.q - 1), r)
    h0 = psp_order(n, q0) * cc
    return _entry(g, "C5", f"Sp({n},{q0})", {"q0": q0, "r": r},
                  h0, out_order(g), formula="psp-c5")


def psp_c6(n, q):
    g = psp(n, q)
    qq = g.q
    q = qq.q
    _require(qq.e == 1 and q % 2 == 1, "extraspecial normalizer needs odd prime q")
    _require(n >= 4 and n & (n - 1) == 0, "extraspecial normalizer needs n = 2^m")
    m = n.bit_length() - 1
    if q % 8 in (1, 7):
        h0 = 2 ** (2 * m) * so_order(2 * m, MINUS, 2)
        o1 = 1
        name = f"2^{2 * m}.SO{2 * m}-(2)"
    else:
        h0 = 2 ** (2 * m) * omega_order(2 * m, MINUS, 2)
        o1 = 2
        name = f"2^{2 * m}.O{2 * m}-(2)"
    return _entry(g, "C6", f"2^(1+{2 * m}).O{2 * m}-(2)", {}, h0, o1,
                  c=2 // o1, name=name, formula="psp-c6")


def psp_c7(n, q, m, t):
    g = psp(n, q)
    qq = g.q
    q = qq.q
    _require(n == m ** t and m >= 2 and m % 2 == 0 and t >= 2,
             "tensor-power type needs n = m^t with even m")
    _require(q % 2 == 1 and t % 2 == 1, "this type needs q and t odd")
    _require((m, q) != (2, 3), "the (2,3) tensor-power case does not occur")
    d = gcd(2, q - 1)
    h0 = sp_order(m, q) ** t * factorial(t) // d
    return _entry(g, "C7", f"Sp({m},{q}) wr S{t} (tensor)", {"m": m, "t": t},
                  h0, d * qq.e, formula="psp-c7")


# ---------------------------------------------------------------------------
# orthogonal hosts
# ---------------------------------------------------------------------------


def eps_tag(eps):
    return "" if eps == CIRC else eps


def go_order_proj(n, eps, q):
    """|PGO_n^eps(q)| for odd q: the full orthogonal group modulo its
    center of order 2."""
    from .orders import go_order
    return go_order(n, eps, q) // gcd(2, int(q) - 1)


def _pomega_center(n, eps, q):
    """Order of the center of Omega_n^eps(q), i.e. |Omega| / |POmega|."""
    if n % 2:
        return 1
    m = n // 2
    s = 1 if eps == PLUS else -1
    return gcd(4, q ** m - s) // gcd(2, q - 1)


def _pso_o1(g):
    """Outer part available to the normalizer of a geometric subgroup of an
    orthogonal group: diagonal and field parts only.  The order-3 graph
    automorphism of the 8-dimensional plus type never normalizes these
    subgroups, so it is excluded even when n = 8."""
    qq = g.q
    if g.eps == CIRC:
        return 2 * qq.e
    s = 1 if g.eps == PLUS else -1
    return 2 * gcd(4, int(qq) ** (g.n // 2) - s) * qq.e


def pso_c1(n, eps, q):
    g = pomega(n, q, eps)
    q = int(g.q)
    m = n // 2
    exp = m * (m - 1) if n % 2 == 0 else m * m
    return _entry(g, "C1", "subspace stabilizer", {}, q ** exp, 1,
                  bound=LOWER, formula="sylow-p-lower")


def pso_c2_gl(n, eps, q):
    g = pomega(n, q, eps)
    q = int(g.q)
    _require(n % 2 == 0 and eps == PLUS, "the GL-type stabilizer needs plus type")
    return _entry(g, "C2", f"GL({n // 2},{q}).2", {},
                  gl_order(n // 2, q) // ((q - 1) * 4), 1, bound=LOWER,
                  formula="pso-c2-gl-lower")


def pso_c2_o1p(n, eps, q):
    """Type GO1(p) wr Sn: the framed-basis stabilizer over a prime field."""
    g = pomega(n, q, eps)
    qq = g.q
    q = qq.q
    _require(qq.e == 1 and q % 2 == 1, "framed-basis stabilizer needs odd prime q")
    if n % 2:
        _require(eps == CIRC, "odd dimension takes no sign")
    else:
        want = PLUS if ((q - 1) * n // 4) % 2 == 0 else MINUS
        _require(eps == want, "sign forced by the discriminant of the framed form")
    bound = EXACT
    if q == 3 and 7 <= n <= 13:
        h0 = 2 ** (n - gcd(2, n) - 1) * factorial(n) // 2
        name = f"2^{n - gcd(2, n) - 1}.A{n}"
    elif q == 3 and n == 14:
        h0 = 2 ** 12 * factorial(14) // 2
        name = "2^12.A14"
    elif q == 3 and n == 15:
        h0 = 2 ** 14 * factorial(15) // 2
        name = "2^14.A15"
    elif q == 5 and n == 7:
        h0 = 2 ** 5 * factorial(7)
        name = "2^5.S7"
    elif q == 5 and n == 8:
        h0 = 2 ** 6 * factorial(8) // 2
        name = "2^6.A8"
    elif q == 5 and n == 9:
        h0 = 2 ** 8 * factorial(9) // 2
        name = "2^8.A9"
    else:
        h0 = 2 ** (n - 1) * factorial(n)
        name = f"<= 2^{n - 1}.S{n}"
        bound = UPPER
    if n % 2:
        o1 = 2 if q % 8 in (3, 5) else 1
    else:
        o1 = 4 if q % 8 in (3, 5) else 2
    return _entry(g, "C2", f"GO1({q}) wr S{n}", {}, h0, o1, bound=bound,
                  name=name, formula="pso-c2-o1p")


def pso_c2_go_wr(n, eps, q, m, eps1, t):
    g = pomega(n, q, eps)
    qq = g.q
    q = qq.q
    _require(n == m * t and t >= 2 and m >= 2, "imprimitive type needs n = m*t")
    if m % 2 == 0:
        want = PLUS if (eps1 == PLUS or t % 2 == 0) else MINUS
        _require(eps == want, "sign must be the t-th power of the block sign")
        _require(eps1 in (PLUS, MINUS), "even blocks carry a sign")
    else:
        _require(eps1 == CIRC and q % 2 == 1, "odd blocks need odd q and no sign")
        if t % 2 == 0:
            want = PLUS if ((q - 1) * n // 4) % 2 == 0 else MINUS
            _require(eps == want, "sign forced by the discriminant")
        else:
            _require(eps == CIRC, "odd n has no sign")
    _require(not (m == 2 and t == 4 and eps1 == PLUS) or q >= 5,
             "plus-type blocks of dimension 2 with t = 4 need q >= 5")
    z = _pomega_center(n, eps, q)
    h0 = (omega_order(m, eps1, q) ** t
          * 2 ** (gcd(2, q - 1) * (t - 1)) * factorial(t))
    _require(h0 % z == 0, "central quotient must divide the stabilizer order")
    return _entry(g, "C2", f"GO{eps_tag(eps1)}({m},{q}) wr S{t}",
                  {"m": m, "t": t, "eps1": eps1}, h0 // z, _pso_o1(g),
                  formula="pso-c2-go-wr")


def pso_c3(n, eps, q, kind):
    g = pomega(n, q, eps)
    q = int(g.q)
    m = n // 2
    if kind == "GU":
        _require(n % 2 == 0, "the unitary field-change type needs even n")
        return _entry(g, "C3", f"GU({m},{q})", {},
                      gu_order(m, q) // (gcd(2, q - 1) * (q + 1)), 1,
                      bound=LOWER, formula="pso-c3-lower")
    if kind == "GOo":
        _require(n % 4 == 2 and q % 2 == 1, "the odd-block field change needs n = 2 mod 4, q odd")
        ksign = CIRC
    else:
        _require(n % 4 == 0 and eps != CIRC, "the signed field change needs 4 | n")
        ksign = eps
    return _entry(g, "C3", f"GO{eps_tag(ksign)}({m},{q}^2)", {},
                  omega_order(m, ksign, q * q) // 2, 1,
                  bound=LOWER, formula="pso-c3-lower")


def pso_c3_extra(n, eps, q, m, s):
    g = pomega(n, q, eps)
    q = int(g.q)
    _require(n == m * s and m >= 3 and s % 2 == 1 and _is_prime(s),
             "degree must be an odd prime with n = m*s")
    _require(eps != CIRC or m % 2 == 1, "sign must match the block dimension")
    z = _pomega_center(n, eps, q)
    h0 = omega_order(m, eps if m % 2 == 0 else CIRC, q ** s) * s
    if h0 % z:
        z = 1
    return _entry(g, "C3", f"GO{eps_tag(eps)}({m},{q}^{s})", {"m": m, "s": s},
                  h0 // z, _pso_o1(g), formula="pso-c3-extra")


def pso_c4(n, eps, q):
    g = pomega(n, q, eps)
    q = int(g.q)
    _require(eps == PLUS and n % 4 == 0, "the symplectic tensor type needs plus type")
    h0 = sp_order(2, q) * sp_order(n // 2, q) // gcd(2, q - 1)
    return _entry(g, "C4", f"Sp(2,{q}) (x) Sp({n // 2},{q})", {}, h0, 1,
                  bound=LOWER, formula="pso-c4-lower")


def pso_c5(n, eps, q, r, eps_sub=None):
    g = pomega(n, q, eps)
    qq = g.q
    _require(qq.e % r == 0 and _is_prime(r), "subfield index must be a prime dividing e")
    q0 = qq.p ** (qq.e // r)
    if eps_sub is None:
        eps_sub = eps
    if r % 2:
        _require(eps_sub == eps, "odd subfield index keeps the sign")
    else:
        _require(n % 2 == 1 or eps == PLUS, "even subfield index forces plus type")
        _require(n % 2 == 0 or eps_sub == CIRC, "odd dimension takes no sign")
    h0 = omega_order(n, eps_sub, q0) // gcd(2, q0 - 1)
    return _entry(g, "C5", f"GO{eps_tag(eps_sub)}({n},{q0})",
                  {"q0": q0, "r": r}, h0, _pso_o1(g), formula="pso-c5")


def pso_c6(n, q):
    g = pomega(n, q, PLUS)
    qq = g.q
    q = qq.q
    _require(qq.e == 1 and q % 2 == 1, "extraspecial normalizer needs odd prime q")
    _require(n >= 8 and n & (n - 1) == 0, "extraspecial normalizer needs n = 2^m >= 8")
    m = n.bit_length() - 1
    cc = 4 if q % 8 in (3, 5) else 8
    h0 = 2 ** (2 * m + 2) * omega_order(2 * m, PLUS, 2) // cc
    return _entry(g, "C6", f"2^(2+{2 * m}).O{2 * m}+(2)", {}, h0, 8 // cc,
                  c=cc, name=f"2^{2 * m}.O{2 * m}+(2)", formula="pso-c6")


def pso_c7(n, eps, q, m, t, kind, eps1=None):
    g = pomega(n, q, eps)
    qq = g.q
    q = qq.q
    _require(n == m ** t and t >= 2, "tensor-power type needs n = m^t")
    d = gcd(2, q - 1)
    if kind == "sp":
        _require(eps == PLUS and m % 2 == 0 and (q * t) % 2 == 0,
                 "symplectic tensor power needs plus type and qt even")
        _require((m, q) not in ((2, 2), (2, 3)), "tiny symplectic blocks do not occur")
        _require((m, t) != (2, 3), "the (2,3) symplectic tensor power does not occur")
        h0 = psp_order(m, q) ** t * 2 ** (t - 1) * factorial(t)
        desc = f"Sp({m},{q}) wr S{t} (tensor)"
        bound = UPPER
    elif kind == "circ":
        _require(eps == CIRC and m >= 3 and m % 2 == 1 and q % 2 == 1,
                 "odd tensor power needs odd blocks and odd q")
        _require((m, q) != (3, 3), "the (3,3) tensor power does not occur")
        h0 = omega_order(m, CIRC, q) ** t * 2 ** (t - 1) * factorial(t)
        desc = f"GO({m},{q}) wr S{t} (tensor)"
        bound = EXACT
    else:
        _require(eps == PLUS and q % 2 == 1 and eps1 in (PLUS, MINUS),
                 "signed tensor power needs plus host and odd q")
        _require(m >= (4 if eps1 == PLUS else 6), "block dimension too small")
        h0 = so_order(m, eps1, q) ** t * 2 ** (t - 1) * factorial(t)
        desc = f"GO{eps1}({m},{q}) wr S{t} (tensor)"
        bound = UPPER
    return _entry(g, "C7", desc, {"m": m, "t": t}, h0, _pso_o1(g),
                  bound=bound, formula="pso-c7")


# ---------------------------------------------------------------------------
# the two graph-automorphism hosts
# ---------------------------------------------------------------------------


def sp4_graph_candidates(q):
    """Candidates in Sp4(q), q even >= 4, when the overgroup realizes the
    graph automorphism."""
    qq = parse_prime_power(q)
    q = qq.q
    if qq.p != 2 or q < 4:
        raise UnsupportedGroup("the graph automorphism case needs Sp4(2^e), q >= 4")
    g = psp(4, q)
    o1 = 2 * qq.e
    rows = [
        _entry(g, "X", "[q^4]:(q-1)^2", {}, q ** 4 * (q - 1) ** 2, o1,
               name="[q^4]:(q-1)^2", formula="sp4-graph"),
        _entry(g, "X", "(q-1)^2:D8", {}, (q - 1) ** 2 * 8, o1,
               name="(q-1)^2:D8", formula="sp4-graph"),
        _entry(g, "X", "(q+1)^2:D8", {}, (q + 1) ** 2 * 8, o1,
               name="(q+1)^2:D8", formula="sp4-graph"),
        _entry(g, "X", "(q^2+1):4", {}, (q * q + 1) * 4, o1,
               name="(q^2+1):4", formula="sp4-graph"),
    ]
    for r in (2, 3, 5, 7):
        if qq.e % r == 0:
            q0 = qq.p ** (qq.e // r)
            if q0 >= 2:
                rows.append(_entry(g, "X", f"Sp(4,{q0})", {"q0": q0, "r": r},
                                   sp_order(4, q0), o1, name=f"Sp4({q0})",
                                   formula="sp4-graph"))
    if qq.e % 2 == 1 and qq.e >= 3:
        rows.append(_entry(g, "X", f"Sz({q})", {}, sz_order(q), o1,
                           name=f"Sz({q})", formula="sp4-graph"))
    return rows


def _with_item(entry, label):
    """Attach the stable list position label to a candidate entry."""
    return replace(entry, params=entry.params + (("item", label),))


def o8_triality_candidates(q):
    """Candidates in POmega8+(q) when the overgroup realizes a triality.

    Every row carries an "item" parameter giving its stable position label
    (roman i..xiii); rows whose side conditions reject the given q are
    simply absent, but the surviving labels never shift.
    """
    qq = parse_prime_power(q)
    q = qq.q
    g = pomega(8, q, PLUS)
    d = gcd(2, q - 1)
    o1 = 6 * gcd(4, q ** 4 - 1) * qq.e
    rows = [
        ("i", _entry(g, "X", "parabolic", {}, q ** 12, o1, bound=LOWER,
                     name="parabolic", formula="o8-tri")),
        ("ii", _entry(g, "X", f"G2({q})", {}, g2_order(q), o1,
                      name=f"G2({q})", formula="o8-tri")),
    ]
    for e2 in (PLUS, MINUS):
        rows.append(("iii", _entry(g, "X", f"GO{e2}(2,{q}) perp GO{e2}(6,{q})",
                                   {}, omega_order(6, e2, q) // d, o1,
                                   bound=LOWER, name=f"O{e2}6 point",
                                   formula="o8-tri")))
    if qq.e == 1 and q % 2 == 1:
        rows.append(("iv", _entry(g, "X", "2^3.2^6.PSL3(2)", {}, 2 ** 9 * 168,
                                  o1, name="2^3.2^6.PSL3(2)", formula="o8-tri")))
    try:
        rows.append(("v", pso_c2_go_wr(8, PLUS, q, 2, MINUS, 4)))
    except ConstraintViolation:
        pass
    if q >= 5:
        rows.append(("vi", pso_c2_go_wr(8, PLUS, q, 2, PLUS, 4)))
    if q >= 3:
        rows.append(("vii", pso_c2_go_wr(8, PLUS, q, 4, PLUS, 2)))
    rows.append(("viii", _entry(g, "X", "(D_{2(q^2+1)/d})^2.[2d].S2", {},
                                (2 * (q * q + 1) // d) ** 2 * 2 * d * 2, o1,
                                name="torus normalizer", formula="o8-tri")))
    if qq.e % 2 == 0:
        for e2 in (PLUS, MINUS):
            rows.append(("ix", pso_c5(8, PLUS, q, 2, e2)))
    if qq.e % 3 == 0:
        rows.append(("ix", pso_c5(8, PLUS, q, 3, PLUS)))
    if q % 3 == 1:
        rows.append(("x", _entry(g, "X", f"PSL3({q}).3", {},
                                 3 * psl_order(3, q), 6 * qq.e,
                                 name=f"PSL3({q}).3", formula="o8-tri")))
    if q % 3 == 2 and q != 2:
        rows.append(("x", _entry(g, "X", f"PSU3({q}).3", {}, su_order(3, q),
                                 6 * qq.e, name=f"PSU3({q}).3",
                                 formula="o8-tri")))
    if qq.e % 3 == 0:
        q0 = qq.p ** (qq.e // 3)
        rows.append(("xi", _entry(g, "X", f"3D4({q0})", {"q0": q0},
                                  tri_d4_order(q0), o1, name=f"3D4({q0})",
                                  formula="o8-tri")))
    if qq.e == 1 and q % 2 == 1:
        rows.append(("xii", _entry(g, "X", "POmega8+(2)", {}, 174182400, o1,
                                   name="POmega8+(2)", formula="o8-tri")))
    if q == 5:
        rows.append(("xiii", _entry(g, "X", "Sz(8)", {}, sz_order(8), o1,
                                    name="Sz(8)", formula="o8-tri")))
    return [_with_item(e, label) for label, e in rows]


def exceptional_candidates(g0, which):
    if isinstance(g0, str):
        g0 = parse_group(g0)
    if which == "sp4_graph":
        if g0.family != "PSp" or g0.n != 4:
            raise UnsupportedGroup(f"{g0} is not a graph-automorphism symplectic host")
        return sp4_graph_candidates(int(g0.q))
    if which == "o8_triality":
        if g0.family != "POmega" or (g0.n, g0.eps) != (8, PLUS):
            raise UnsupportedGroup(f"{g0} is not a triality host")
        return o8_triality_candidates(int(g0.q))
    raise UnknownCase(f"unknown exceptional case {which!r}")


# ---------------------------------------------------------------------------
# permutation-module hosts and the literal tables
# ---------------------------------------------------------------------------


def _is_square_mod(a, p):
    a %= p
    return any((x * x) % p == a for x in range(p))


def collection_a_host(d, p, epsilon_hint=None):
    """Host classical group for Alt(d) acting on its fully deleted
    permutation module over GF(p)."""
    if d < 5:
        raise ConstraintViolation("the permutation module hosts need d >= 5")
    if p == 2:
        r8 = d % 8
        if d % 4 == 2:
            return psp(d - 2, 2)
        if r8 == 0:
            return pomega(d - 2, 2, PLUS)
        if r8 == 4:
            return pomega(d - 2, 2, MINUS)
        if r8 in (1, 7):
            return pomega(d - 1, 2, PLUS)
        return pomega(d - 1, 2, MINUS)
    n = d - 1 if d % p else d - 2
    if n % 2:
        return pomega(n, p, CIRC)
    disc = d % p if d % p else p - 1
    sq = _is_square_mod(((-1) ** (n // 2) * disc) % p, p)
    eps = PLUS if sq else MINUS
    if epsilon_hint in (PLUS, MINUS):
        eps = epsilon_hint
    return pomega(n, p, eps)


@dataclass(frozen=True)
class TableRow:
    """One row of the irreducible almost simple candidate tables.

    Patterns may mention q (the host field size) or q0 (its square or cube
    root); the condition field restricts q.  Concrete rows use condition "-".
    """

    g0_pattern: str
    h0_pattern: str
    condition: str
    remark: str
    table: str

    def matches_q(self, q):
        cond = self.condition
        if cond == "-" or cond == "q:any":
            return True
        if cond == "q:odd":
            return q % 2 == 1
        if cond == "q:even":
            return q % 2 == 0
        if cond == "q:sz":
            qq = parse_prime_power(q)
            return qq.p == 2 and qq.e % 2 == 1 and qq.e >= 3
        if cond.startswith("q:in:"):
            return q in {int(v) for v in cond[5:].split(",")}
        raise DataIntegrityError(f"bad condition {cond!r}")

    def _q0(self, qq):
        if "q0^2" in self.g0_pattern:
            return qq.p ** (qq.e // 2) if qq.e % 2 == 0 else None
        if "q0^3" in self.g0_pattern:
            return qq.p ** (qq.e // 3) if qq.e % 3 == 0 else None
        return 0

    def instantiate(self, q):
        """Concrete (host, subgroup name, |H0|) at field size q, or None if
        the row does not apply there."""
        qq = parse_prime_power(q)
        q = qq.q
        if not self.matches_q(q):
            return None
        q0 = self._q0(qq)
        if q0 is None:
            return None
        g0_name = self.g0_pattern.replace("q0^2", str(q)).replace("q0^3", str(q))
        g0_name = _subst_q(g0_name, q)
        h0_name = _subst_q(_subst_q0(self.h0_pattern, q0), q)
        g0 = parse_group(g0_name)
        h0_order = subgroup_name_order(h0_name)
        return g0, h0_name, h0_order

    def sample_q(self):
        cond = self.condition
        if cond.startswith("q:in:"):
            return int(cond[5:].split(",")[0])
        if cond == "q:even":
            return 4
        if cond == "q:sz":
            return 8
        base = 3
        if "q0^2" in self.g0_pattern:
            return 9
        if "q0^3" in self.g0_pattern:
            return 27
        if cond in ("-", "q:any", "q:odd"):
            return base
        raise DataIntegrityError(f"bad condition {cond!r}")


import re as _re


def _subst_q(text, q):
    return _re.sub(r"\bq\b", str(q), text)


def _subst_q0(text, q0):
    return _re.sub(r"\bq0\b", str(q0), text)


def _fixed_q(pattern):
    """Field size of a fully concrete host pattern, else None."""
    if _re.search(r"\bq0?\b", pattern):
        return None
    m = _re.search(r",\s*(\d+)\)$", pattern)
    return int(m.group(1)) if m else None


def _load_table(fname, table):
    raw = resources.files("large_atlas.data").joinpath(fname).read_text()
    rows = []
    for lineno, line in enumerate(raw.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 4:
            raise DataIntegrityError(f"{fname}:{lineno}: expected 4 fields")
        row = TableRow(parts[0], parts[1], parts[2], parts[3], table)
        q = _fixed_q(row.g0_pattern) or row.sample_q()
        try:
            got = row.instantiate(q)
        except (UnsupportedGroup, ConstraintViolation) as exc:
            raise DataIntegrityError(f"{fname}:{lineno}: {exc}") from None
        if got is None:
            raise DataIntegrityError(f"{fname}:{lineno}: sample field size rejected")
        g0, h0_name, h0_order = got
        if order(g0) % h0_order:
            raise DataIntegrityError(
                f"{fname}:{lineno}: |{h0_name}| does not divide |{g0}|")
        rows.append(row)
    return tuple(rows)


_TABLE_CACHE = {}


def table_rows(which):
    """Rows of table 'A' (alternating socle on the deleted permutation
    module) or 'B' (the other irreducible almost simple candidates)."""
    if which not in ("A", "B"):
        raise UnknownCase(f"no table {which!r}")
    if which not in _TABLE_CACHE:
        fname = "table_a.txt" if which == "A" else "table_b.txt"
        _TABLE_CACHE[which] = _load_table(fname, which)
    return _TABLE_CACHE[which]


def table_entries(g0):
    out = []
    q = int(g0.q)
    for which in ("A", "B"):
        for row in table_rows(which):
            fixed = _fixed_q(row.g0_pattern)
            if fixed is not None and fixed != q:
                continue
            try:
                got = row.instantiate(q)
            except (UnsupportedGroup, ConstraintViolation):
                continue
            if got is None or got[0] != g0:
                continue
            _, h0_name, h0_order = got
            try:
                o1 = out_order(g0)
            except (UnsupportedGroup, ConstraintViolation):
                o1 = 1
            out.append(_entry(g0, "A" if which == "A" else "S",
                              h0_name, {}, h0_order, o1, name=h0_name,
                              formula=f"table-{which.lower()}-row"))
    return out


# ---------------------------------------------------------------------------
# full candidate enumeration for one host
# ---------------------------------------------------------------------------


def _is_prime(n):
    from .arith import is_prime
    return is_prime(n)


def _divisor_splits(n):
    return [(n // t, t) for t in range(2, n + 1) if n % t == 0]


def _power_splits(n):
    out = []
    for m in range(2, n):
        t = 0
        k = 1
        while k < n:
            k *= m
            t += 1
        if k == n and t >= 2:
            out.append((m, t))
    return out


def _collect(out, fn, *args, **kwargs):
    try:
        r = fn(*args, **kwargs)
    except (ConstraintViolation, UnsupportedGroup):
        return
    if isinstance(r, list):
        out.extend(r)
    elif r is not None:
        out.append(r)


def candidates(g0):
    """All catalog entries whose constraints accept the given simple host."""
    if isinstance(g0, str):
        g0 = parse_group(g0)
    fam, n, qq, eps = g0.family, g0.n, g0.q, g0.eps
    q = int(qq)
    out = []
    if fam == "PSL":
        _collect(out, psl_c1, n, q)
        for m, t in _divisor_splits(n):
            _collect(out, psl_c2, n, q, m, t)
        for m, r in _divisor_splits(n):
            if _is_prime(r):
                _collect(out, psl_c3, n, q, m, r)
        for n1, n2 in _divisor_splits(n):
            _collect(out, psl_c4, n, q, min(n1, n2), max(n1, n2))
        for r in (2, 3, 5, 7):
            if qq.e % r == 0:
                _collect(out, psl_c5, n, q, r)
        _collect(out, psl_c6, n, q)
        for m, t in _power_splits(n):
            _collect(out, psl_c7, n, q, m, t)
        _collect(out, psl_c8, n, q)
    elif fam == "PSU":
        _collect(out, psu_c1, n, q)
        _collect(out, psu_c2_gl, n, q)
        for m, t in _divisor_splits(n):
            _collect(out, psu_c2_wr, n, q, m, t)
        for m, r in _divisor_splits(n):
            if r % 2 and _is_prime(r):
                _collect(out, psu_c3, n, q, m, r)
        for n1, n2 in _divisor_splits(n):
            _collect(out, psu_c4, n, q, min(n1, n2), max(n1, n2))
        for r in (2, 3, 5, 7):
            if qq.e % r == 0:
                _collect(out, psu_c5_subfield, n, q, r)
        for kind in ("Sp", PLUS, MINUS, "GOo"):
            _collect(out, psu_c5_form, n, q, kind if kind != "GOo" else CIRC)
        _collect(out, psu_c6, n, q)
        for m, t in _power_splits(n):
            _collect(out, psu_c7, n, q, m, t)
    elif fam == "PSp":
        _collect(out, psp_c1, n, q)
        _collect(out, psp_c2_gl, n, q)
        for m, t in _divisor_splits(n):
            _collect(out, psp_c2_wr, n, q, m, t)
        for m, r in _divisor_splits(n):
            _collect(out, psp_c3, n, q, m, r)
        _collect(out, psp_c3_gu, n, q)
        for n1, n2 in _divisor_splits(n):
            for e2 in (PLUS, MINUS, CIRC):
                _collect(out, psp_c4, n, q, n1, n2, e2)
        for r in (2, 3, 5, 7):
            if qq.e % r == 0:
                _collect(out, psp_c5, n, q, r)
        _collect(out, psp_c6, n, q)
        for m, t in _power_splits(n):
            _collect(out, psp_c7, n, q, m, t)
    elif fam == "POmega":
        _collect(out, pso_c1, n, eps, q)
        _collect(out, pso_c2_gl, n, eps, q)
        _collect(out, pso_c2_o1p, n, eps, q)
        for m, t in _divisor_splits(n):
            for e1 in (PLUS, MINUS, CIRC):
                _collect(out, pso_c2_go_wr, n, eps, q, m, e1, t)
        for kind in ("GU", "GO", "GOo"):
            _collect(out, pso_c3, n, eps, q, kind)
        for m, s in _divisor_splits(n):
            _collect(out, pso_c3_extra, n, eps, q, m, s)
        _collect(out, pso_c4, n, eps, q)
        for r in (2, 3):
            if qq.e % r == 0:
                for e2 in (PLUS, MINUS, CIRC):
                    _collect(out, pso_c5, n, eps, q, r,
                             e2 if r == 2 else None)
        _collect(out, pso_c6, n, q)
        for m, t in _power_splits(n):
            for kind in ("sp", "circ", "signed"):
                if kind == "signed":
                    for e1 in (PLUS, MINUS):
                        _collect(out, pso_c7, n, eps, q, m, t, kind, e1)
                else:
                    _collect(out, pso_c7, n, eps, q, m, t, kind)
    else:
        raise UnsupportedGroup(f"no catalog for family {fam}")
    out.extend(table_entries(g0))
    seen = set()
    uniq = []
    for e in out:
        key = (e.aschbacher_class, e.type_descriptor, e.params)
        if key not in seen:
            seen.add(key)
            uniq.append(e)
    return uniq


# ---------------------------------------------------------------------------
# registry validation against the entry list data file
# ---------------------------------------------------------------------------

FORMULAS = {
    "sylow-p-lower", "psl-c2", "psl-c3", "psl-c4", "psl-c5", "psl-c6-n2",
    "psl-c6-n3", "psl-c6-n4", "psl-c6-n8", "psl-c7", "c8-classical-lower",
    "psu-c2", "psu-c2-gl", "psu-c3", "psu-c4", "psu-c5", "psu-c6-n3",
    "psu-c6-n4", "psu-c6-n8", "psu-c7", "psp-c2", "psp-c2-gl-lower",
    "psp-c3", "psp-c3-gu-lower", "psp-c4", "psp-c5", "psp-c6", "psp-c7",
    "pso-c2-gl-lower", "pso-c2-o1p", "pso-c2-go-wr", "pso-c3-lower",
    "pso-c3-extra", "pso-c4-lower", "pso-c5", "pso-c6", "pso-c7",
    "sp4-graph", "o8-tri", "table-a-row", "table-b-row",
}


def validate_registry():
    """Cross-check the human-readable entry list against the formula
    registry; raises DataIntegrityError naming the offending record."""
    raw = resources.files("large_atlas.data").joinpath("catalog_entries.txt").read_text()
    seen = set()
    for lineno, line in enumerate(raw.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 4:
            raise DataIntegrityError(f"catalog_entries.txt:{lineno}: expected 4 fields")
        family, klass, desc, formula = parts
        if formula not in FORMULAS:
            raise DataIntegrityError(
                f"catalog_entries.txt:{lineno}: unknown formula id {formula!r}")
        seen.add(formula)
    missing = FORMULAS - seen - {"table-a-row", "table-b-row"}
    if missing:
        raise DataIntegrityError(f"catalog_entries.txt lacks records for {sorted(missing)}")
    return True
