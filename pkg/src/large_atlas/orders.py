"""Exact orders of finite classical groups and their relatives.

The module knows the classical families (linear, unitary, symplectic,
orthogonal) in their quasisimple, adjoint and projective variants, the
alternating/symmetric groups, the handful of exceptional families needed by
the tables (Sz, G2, triality D4), and a small checked-in list of fixed group
orders.  Everything is exact integer arithmetic.
"""

import hashlib
import re
from dataclasses import dataclass, field
from importlib import resources
from math import gcd, prod

from .arith import PrimePower, factorial, parse_prime_power
from .errors import DataIntegrityError, GroupParseError, UnsupportedGroup

# epsilon markers for orthogonal groups
PLUS = "+"
MINUS = "-"
CIRC = "o"

_SPORADIC_SHA256 = "3c8d1b241ad9e43ca67360240bbb6deb9c8971ad56c1c54610217f33e55b7b39"


def _load_sporadic_orders():
    raw = resources.files("large_atlas.data").joinpath("sporadic_orders.txt").read_bytes()
    if hashlib.sha256(raw).hexdigest() != _SPORADIC_SHA256:
        raise DataIntegrityError("sporadic_orders.txt failed its checksum")
    table = {}
    for line in raw.decode().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, value = line.split()
        table[name] = int(value)
    return table


SPORADIC_ORDERS = _load_sporadic_orders()

_FAMILIES = {
    "PSL", "PSU", "PSp", "POmega",
    "SL", "GL", "SU", "GU", "Sp", "PGL", "PGU",
    "SO", "GO", "Omega",
    "Alt", "Sym", "Sz", "G2", "3D4", "Sporadic",
}


@dataclass(frozen=True)
class GroupId:
    """Identifier of a group in one of the supported families."""

    family: str
    n: int = 0
    q: PrimePower = None
    eps: str = ""
    name: str = ""

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise UnsupportedGroup(f"unknown family {self.family!r}")

    def __str__(self):
        if self.family == "Sporadic":
            return f"Sporadic({self.name})"
        if self.family in ("Alt", "Sym"):
            return f"{self.family}({self.n})"
        if self.family in ("Sz", "G2", "3D4"):
            return f"{self.family}({self.q})"
        if self.family in ("POmega", "SO", "GO", "Omega") and self.eps in (PLUS, MINUS):
            return f"{self.family}{self.eps}({self.n},{self.q})"
        return f"{self.family}({self.n},{self.q})"


def _pp(q):
    return parse_prime_power(q)


def psl(n, q):
    return GroupId("PSL", n, _pp(q))


def psu(n, q):
    return GroupId("PSU", n, _pp(q))


def psp(n, q):
    return GroupId("PSp", n, _pp(q))


def pomega(n, q, eps=None):
    q = _pp(q)
    if eps is None:
        eps = CIRC if n % 2 else PLUS
    if n % 2 and eps != CIRC:
        raise UnsupportedGroup(f"POmega({n},{q}): odd dimension takes no sign")
    if n % 2 == 0 and eps not in (PLUS, MINUS):
        raise UnsupportedGroup(f"POmega({n},{q}): even dimension needs a sign")
    return GroupId("POmega", n, q, eps)


def alt(d):
    return GroupId("Alt", d)


def sym(d):
    return GroupId("Sym", d)


def sporadic(name):
    return GroupId("Sporadic", name=name)


# ---------------------------------------------------------------------------
# order formulas
# ---------------------------------------------------------------------------


def gl_order(n, q):
    """|GL_n(q)| = q^(n(n-1)/2) * prod_{i=1..n} (q^i - 1)."""
    q = int(q)
    return q ** (n * (n - 1) // 2) * prod(q ** i - 1 for i in range(1, n + 1))


def sl_order(n, q):
    q = int(q)
    return gl_order(n, q) // (q - 1)


def gu_order(n, q):
    """|GU_n(q)| = q^(n(n-1)/2) * prod_{i=1..n} (q^i - (-1)^i)."""
    q = int(q)
    return q ** (n * (n - 1) // 2) * prod(q ** i - (-1) ** i for i in range(1, n + 1))


def su_order(n, q):
    q = int(q)
    return gu_order(n, q) // (q + 1)


def sp_order(n, q):
    """|Sp_n(q)| for even n = 2m: q^(m^2) * prod_{i=1..m} (q^2i - 1)."""
    if n % 2:
        raise UnsupportedGroup(f"Sp_{n} needs even dimension")
    q = int(q)
    m = n // 2
    return q ** (m * m) * prod(q ** (2 * i) - 1 for i in range(1, m + 1))


def omega_order(n, eps, q):
    """|Omega_n^eps(q)| for n >= 2.

    Odd n over odd q uses the kernel-of-spinor-norm order; odd n over even q
    is the symplectic group of rank (n-1)/2.  n = 2 gives the cyclic torus.
    """
    qq = _pp(q)
    q = qq.q
    if n % 2:
        if eps not in ("", CIRC):
            raise UnsupportedGroup("odd-dimensional orthogonal group takes no sign")
        if n == 1:
            return 1
        m = (n - 1) // 2
        full = q ** (m * m) * prod(q ** (2 * i) - 1 for i in range(1, m + 1))
        if qq.p == 2:
            return full  # Omega_{2m+1}(q) = Sp_{2m}(q) in characteristic 2
        return full // 2
    if eps not in (PLUS, MINUS):
        raise UnsupportedGroup("even-dimensional orthogonal group needs a sign")
    m = n // 2
    s = 1 if eps == PLUS else -1
    top = q ** (m * (m - 1)) * (q ** m - s) * prod(q ** (2 * i) - 1 for i in range(1, m))
    return top // gcd(2, q - 1)


def so_order(n, eps, q):
    qq = _pp(q)
    if n % 2 and qq.p == 2:
        raise UnsupportedGroup("SO in odd dimension needs odd q")
    return 2 * omega_order(n, eps, q)


def go_order(n, eps, q):
    qq = _pp(q)
    if n % 2:
        return 2 * so_order(n, eps, q)
    return gcd(2, qq.q - 1) * so_order(n, eps, q)


def pgl_order(n, q):
    q = int(q)
    return gl_order(n, q) // (q - 1)


def pgu_order(n, q):
    q = int(q)
    return gu_order(n, q) // (q + 1)


def psl_order(n, q):
    q = int(q)
    return pgl_order(n, q) // gcd(n, q - 1)


def psu_order(n, q):
    q = int(q)
    return pgu_order(n, q) // gcd(n, q + 1)


def psp_order(n, q):
    q = int(q)
    return sp_order(n, q) // gcd(2, q - 1)


def pomega_order(n, eps, q):
    qq = _pp(q)
    q = qq.q
    if n % 2:
        return omega_order(n, eps, q)
    m = n // 2
    s = 1 if eps == PLUS else -1
    d = gcd(4, q ** m - s)
    return omega_order(n, eps, q) * gcd(2, q - 1) // d


def sz_order(q):
    """|Sz(q)| = q^2 (q^2 + 1)(q - 1), q = 2^(2k+1) >= 8."""
    qq = _pp(q)
    if qq.p != 2 or qq.e % 2 == 0 or qq.e < 3:
        raise UnsupportedGroup(f"Sz({qq}) is only defined for q = 2^(2k+1) >= 8")
    q = qq.q
    return q * q * (q * q + 1) * (q - 1)


def g2_order(q):
    """|G2(q)| = q^6 (q^6 - 1)(q^2 - 1)."""
    q = int(_pp(q))
    return q ** 6 * (q ** 6 - 1) * (q ** 2 - 1)


def tri_d4_order(q):
    """|3D4(q)| = q^12 (q^8 + q^4 + 1)(q^6 - 1)(q^2 - 1)."""
    q = int(_pp(q))
    return q ** 12 * (q ** 8 + q ** 4 + 1) * (q ** 6 - 1) * (q ** 2 - 1)


def alt_order(d):
    if d < 1:
        raise UnsupportedGroup("Alt(d) needs d >= 1")
    return max(factorial(d) // 2, 1)


def sym_order(d):
    if d < 1:
        raise UnsupportedGroup("Sym(d) needs d >= 1")
    return factorial(d)


def sporadic_order(name):
    """Order of one of the fixed groups, by name.

    Accepts the checked-in constant names (J2, J3, M10, M22, M24) as well as
    a few computable spellings used by the tables (A7, Sz(8), ...).
    """
    if name in SPORADIC_ORDERS:
        return SPORADIC_ORDERS[name]
    return subgroup_name_order(name)


def order(g):
    """Exact order of the group identified by g (GroupId or name string)."""
    if isinstance(g, str):
        g = parse_group(g)
    fam, n, q, eps = g.family, g.n, g.q, g.eps
    if fam == "PSL":
        _check_dim(fam, n, 2)
        return psl_order(n, q)
    if fam == "PSU":
        _check_dim(fam, n, 2)
        return psu_order(n, q)
    if fam == "PSp":
        _check_dim(fam, n, 2)
        return psp_order(n, q)
    if fam == "POmega":
        return pomega_order(n, eps, q)
    if fam == "GL":
        return gl_order(n, q)
    if fam == "SL":
        return sl_order(n, q)
    if fam == "GU":
        return gu_order(n, q)
    if fam == "SU":
        return su_order(n, q)
    if fam == "Sp":
        return sp_order(n, q)
    if fam == "PGL":
        return pgl_order(n, q)
    if fam == "PGU":
        return pgu_order(n, q)
    if fam == "SO":
        return so_order(n, eps, q)
    if fam == "GO":
        return go_order(n, eps, q)
    if fam == "Omega":
        return omega_order(n, eps, q)
    if fam == "Alt":
        return alt_order(n)
    if fam == "Sym":
        return sym_order(n)
    if fam == "Sz":
        return sz_order(q)
    if fam == "G2":
        return g2_order(q)
    if fam == "3D4":
        return tri_d4_order(q)
    if fam == "Sporadic":
        if g.name not in SPORADIC_ORDERS:
            raise UnsupportedGroup(f"unknown sporadic name {g.name!r}")
        return SPORADIC_ORDERS[g.name]
    raise UnsupportedGroup(f"cannot compute order of {g}")


def _check_dim(fam, n, lo):
    if n < lo:
        raise UnsupportedGroup(f"{fam} needs dimension >= {lo}, got {n}")


# ---------------------------------------------------------------------------
# canonical forms and outer automorphism orders
# ---------------------------------------------------------------------------


def is_simple(g):
    """Whether the projective group is simple (the usual small exceptions)."""
    fam, n, q = g.family, g.n, int(g.q) if g.q else 0
    if fam == "PSL":
        return not (n == 2 and q in (2, 3))
    if fam == "PSU":
        return n >= 3 and (n, q) != (3, 2)
    if fam == "PSp":
        return n >= 4 and (n, q) != (4, 2) or (n == 2 and q >= 4)
    if fam == "POmega":
        if n % 2:
            return n >= 5 and q >= 3 or n >= 7
        if n == 4 and g.eps == PLUS:
            return False  # PSL_2(q) x PSL_2(q)
        return n >= 4
    if fam == "Alt":
        return n >= 5
    return True


def canonicalize(g):
    """Rewrite a group id through the standard exceptional isomorphisms.

    POmega(3) -> PSL(2), POmega(5) -> PSp(4), POmega6^+/- -> PSL4 / PSU4,
    POmega4^- -> PSL2(q^2), odd-dimensional orthogonal in characteristic 2
    -> PSp(n-1), PSU(2) and PSp(2) -> PSL(2).  POmega4^+ is left alone (it is
    not simple; see is_simple).
    """
    fam, n, q, eps = g.family, g.n, g.q, g.eps
    if fam == "PSU" and n == 2:
        return psl(2, q)
    if fam == "PSp" and n == 2:
        return psl(2, q)
    if fam != "POmega":
        return g
    if n % 2 == 1 and q.p == 2:
        return canonicalize(psp(n - 1, q))
    if n == 3:
        return psl(2, q)
    if n == 4 and eps == MINUS:
        return psl(2, PrimePower(q.p, 2 * q.e))
    if n == 5:
        return psp(4, q)
    if n == 6 and eps == PLUS:
        return psl(4, q)
    if n == 6 and eps == MINUS:
        return psu(4, q)
    return g


def out_order(g):
    """|Out(G0)| for the four simple classical families."""
    if isinstance(g, str):
        g = parse_group(g)
    fam, n, q, eps = g.family, g.n, g.q, g.eps
    e = q.e
    qi = q.q
    if fam == "PSL":
        d = gcd(n, qi - 1)
        return 2 * d * e if n >= 3 else d * e
    if fam == "PSU":
        d = gcd(n, qi + 1)
        return 2 * d * e if n >= 3 else d * e
    if fam == "PSp":
        if n == 4:
            return 2 * e
        return gcd(2, qi - 1) * e
    if fam == "POmega":
        if n % 2:
            if q.p == 2:
                return out_order(psp(n - 1, q))
            return 2 * e
        m = n // 2
        s = 1 if eps == PLUS else -1
        d = gcd(4, qi ** m - s)
        if eps == PLUS and m == 4:
            return 6 * d * e
        return 2 * d * e
    raise UnsupportedGroup(f"out_order not defined for {g}")


# ---------------------------------------------------------------------------
# name grammar
# ---------------------------------------------------------------------------

_GROUP_RE = re.compile(
    r"^(?P<fam>PSL|PSU|PSp|POmega|SL|GL|SU|GU|Sp|PGL|PGU|SO|GO|Omega|Alt|Sym|Sz|G2|3D4|Sporadic)"
    r"(?P<sign>[+-]?)\((?P<args>[^)]*)\)$"
)


def parse_group(text):
    """Parse a group name like PSL(4,5), POmega+(8,2), Sz(8), Sporadic(J3)."""
    m = _GROUP_RE.match(text.strip())
    if not m:
        raise GroupParseError(f"cannot parse group name {text!r}")
    fam = m.group("fam")
    sign = m.group("sign")
    args = [a.strip() for a in m.group("args").split(",") if a.strip()]
    if fam == "Sporadic":
        if len(args) != 1 or sign:
            raise GroupParseError(f"bad sporadic selector {text!r}")
        return sporadic(args[0])
    if fam in ("Alt", "Sym"):
        if len(args) != 1 or sign or not args[0].isdigit():
            raise GroupParseError(f"bad degree in {text!r}")
        return GroupId(fam, int(args[0]))
    if fam in ("Sz", "G2", "3D4"):
        if len(args) != 1 or sign or not args[0].isdigit():
            raise GroupParseError(f"bad field size in {text!r}")
        g = GroupId(fam, 0, _pp(int(args[0])))
        order(g)  # validate the field constraint eagerly for Sz
        return g
    if len(args) != 2 or not all(a.isdigit() for a in args):
        raise GroupParseError(f"expected two integer arguments in {text!r}")
    n, q = int(args[0]), int(args[1])
    if fam in ("POmega", "SO", "GO", "Omega"):
        if sign:
            eps = sign
            if n % 2:
                raise GroupParseError(f"signed orthogonal group needs even dimension: {text!r}")
        else:
            if n % 2 == 0:
                raise GroupParseError(f"even-dimensional orthogonal group needs a sign: {text!r}")
            eps = CIRC
        return GroupId(fam, n, _pp(q), eps)
    if sign:
        raise GroupParseError(f"family {fam} takes no sign: {text!r}")
    return GroupId(fam, n, _pp(q))


# ---------------------------------------------------------------------------
# resolver for subgroup names appearing in the data tables
# ---------------------------------------------------------------------------

_SHORT_RE = re.compile(r"^(?P<fam>A|S)(?P<d>\d+)$")
_CLASSICAL_RE = re.compile(r"^(?P<fam>PSL|PSU|PSp|PGL|PGU|SL|SU|Sp)(?P<n>\d+)\((?P<q>\d+)\)$")
_POMEGA_RE = re.compile(r"^POmega(?P<n>\d+)(?P<sign>[+-]?)\((?P<q>\d+)\)$")


def subgroup_name_order(name):
    """Order of a subgroup written in table shorthand.

    Handles A7 / S9, classical shorthands like PSU4(3), an optional ".k"
    extension suffix, 2B2(q) = Sz(q), and the grammar of parse_group.
    """
    name = name.strip()
    mult = 1
    if "." in name:
        base, _, tail = name.rpartition(".")
        if tail.isdigit() and base:
            name, mult = base, int(tail)
    if name in SPORADIC_ORDERS:
        return mult * SPORADIC_ORDERS[name]
    m = _SHORT_RE.match(name)
    if m:
        d = int(m.group("d"))
        return mult * (alt_order(d) if m.group("fam") == "A" else sym_order(d))
    m = _CLASSICAL_RE.match(name)
    if m:
        g = GroupId(m.group("fam"), int(m.group("n")), _pp(int(m.group("q"))))
        return mult * order(g)
    m = _POMEGA_RE.match(name)
    if m:
        n = int(m.group("n"))
        eps = m.group("sign") or CIRC
        return mult * pomega_order(n, eps, int(m.group("q")))
    if name.startswith("2B2(") and name.endswith(")"):
        return mult * sz_order(int(name[4:-1]))
    try:
        return mult * order(parse_group(name))
    except GroupParseError:
        raise UnsupportedGroup(f"cannot resolve subgroup name {name!r}") from None
