"""Command-line surface for the atlas.

Verbs: order, out, subgroups, check, sweep, reproduce, tables, explain.
All numeric output is exact decimal.  Exit codes: 0 success, 2 parse
error, 3 unsupported group, 4 ambiguous selector, 5 missing golden files.
"""

import argparse
import json
import os
import sys

from . import catalog
from . import sweep as sweep_mod
from .errors import (AmbiguousSelector, ConstraintViolation, GroupParseError,
                     LargeAtlasError, MissingGolden, NotAPrimePower,
                     UnknownCase, UnsupportedGroup)
from .largeness import is_large, is_large_h1
from .orders import order, out_order, parse_group

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_AMBIGUOUS = 4
EXIT_MISSING_GOLDEN = 5

_ROMAN = ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x",
          "xi", "xii", "xiii", "xiv", "xv"]


def _verdict_dict(v):
    return {
        "is_large": v.is_large,
        "lhs": v.lhs,
        "rhs": v.rhs,
        "margin": f"{v.margin.numerator}/{v.margin.denominator}",
        "mode": v.mode,
    }


def _entry_dict(entry, verdict=None):
    d = {
        "host": str(entry.host),
        "class": entry.aschbacher_class,
        "type": entry.type_descriptor,
        "name": entry.name,
        "h0_order": entry.h0_order,
        "o1_order": entry.o1_order,
        "bound": entry.bound,
        "formula": entry.formula,
    }
    if verdict is not None:
        d["verdict"] = _verdict_dict(verdict)
    return d


def _parse_item(text):
    text = text.strip().lower()
    if text.isdigit():
        return int(text)
    if text in _ROMAN:
        return _ROMAN.index(text) + 1
    raise GroupParseError(f"cannot parse item selector {text!r}")


def _resolve_entries(g0, args):
    """All catalog entries matched by the selector flags."""
    if getattr(args, "exceptional", None):
        q = int(g0.q)
        if args.exceptional == "sp4":
            pool = catalog.sp4_graph_candidates(q)
        else:
            pool = catalog.o8_triality_candidates(q)
        if args.item:
            idx = _parse_item(args.item)
            label = _ROMAN[idx - 1] if idx <= len(_ROMAN) else str(idx)
            labeled = [e for e in pool if dict(e.params).get("item") == label]
            if labeled:
                pool = labeled
            elif any("item" in dict(e.params) for e in pool):
                raise UnsupportedGroup(
                    f"item {args.item} has no candidate at this field size")
            elif 1 <= idx <= len(pool):
                pool = [pool[idx - 1]]
            else:
                raise UnsupportedGroup(
                    f"item {args.item} out of range 1..{len(pool)}")
    else:
        pool = catalog.candidates(g0) + catalog.table_entries(g0)
    if getattr(args, "klass", None):
        pool = [e for e in pool if e.aschbacher_class.lower() == args.klass.lower()]
    if getattr(args, "type", None):
        want = args.type.strip().lower()
        exact = [e for e in pool
                 if want in (e.type_descriptor.lower(), e.name.lower())]
        pool = exact or [e for e in pool
                         if want in e.type_descriptor.lower()
                         or want in e.name.lower()]
    return pool


def _resolve_entry(g0, args):
    pool = _resolve_entries(g0, args)
    if not pool:
        raise UnsupportedGroup("no catalog entry matches the selector")
    if len(pool) > 1:
        raise AmbiguousSelector(
            "selector matches more than one catalog entry",
            [f"{e.aschbacher_class}: {e.type_descriptor}" for e in pool])
    return pool[0]


# ---------------------------------------------------------------------------
# verb handlers
# ---------------------------------------------------------------------------


def cmd_order(args):
    print(order(parse_group(args.group)))
    return EXIT_OK


def cmd_out(args):
    print(out_order(parse_group(args.group)))
    return EXIT_OK


def cmd_subgroups(args):
    g0 = parse_group(args.group)
    g0_order = order(g0)
    rows = []
    for entry in _resolve_entries(g0, args):
        v = is_large_h1(g0_order, entry)
        rows.append(_entry_dict(entry, v))
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        for r in rows:
            star = "large" if r["verdict"]["is_large"] else "not large"
            print(f"{r['class']:>2}  {r['type']:<34} |H0|={r['h0_order']} "
                  f"o1={r['o1_order']} [{r['bound']}] -> {star} ({r['verdict']['mode']})")
    return EXIT_OK


def cmd_check(args):
    g0 = parse_group(args.group)
    g0_order = order(g0)
    if args.h0_order is not None:
        v = is_large(g0_order, args.h0_order, args.o or 1)
    else:
        entry = _resolve_entry(g0, args)
        if args.o is not None:
            v = is_large(g0_order, entry.h0_order, args.o)
        else:
            v = is_large_h1(g0_order, entry)
    print(json.dumps(_verdict_dict(v), indent=2))
    return EXIT_OK


def cmd_explain(args):
    g0 = parse_group(args.group)
    g0_order = order(g0)
    entry = _resolve_entry(g0, args)
    v = is_large_h1(g0_order, entry)
    if args.json:
        d = _entry_dict(entry, v)
        d["params"] = dict(entry.params)
        d["g0_order"] = g0_order
        print(json.dumps(d, indent=2))
        return EXIT_OK
    print(f"host           {entry.host}  (order {g0_order})")
    print(f"class          {entry.aschbacher_class}")
    print(f"type           {entry.type_descriptor}")
    if entry.name:
        print(f"structure      {entry.name}")
    print(f"formula        {entry.formula}")
    if entry.params:
        print("parameters     " + ", ".join(f"{k}={val}" for k, val in entry.params))
    print(f"|H0|           {entry.h0_order}  ({entry.bound})")
    print(f"|O1|           {entry.o1_order}")
    print(f"cube test      |H0|^3 |O1|^2 = {v.rhs} vs |G0| = {v.lhs}")
    print(f"verdict        {'large' if v.is_large else 'not large'} ({v.mode})")
    return EXIT_OK


def cmd_sweep(args):
    if args.list:
        for cid in sweep_mod.case_ids():
            print(cid)
        return EXIT_OK
    if not args.case:
        print("sweep: a case id is required (or --list)", file=sys.stderr)
        return EXIT_PARSE
    report = sweep_mod.run_case(args.case)
    if args.json:
        print(report.to_json())
    else:
        print(f"{report.case_id}: {len(report.members)} members, "
              f"{len(report.missing)} missing, {len(report.extra)} extra, "
              f"{report.elapsed_ms} ms")
        for m in report.missing:
            print(f"  missing: {sweep_mod._fmt(m)}")
        for m in report.extra:
            print(f"  extra:   {sweep_mod._fmt(m)}")
        for a in report.alarms:
            print(f"  alarm:   {a}")
    return EXIT_OK if report.ok else 1


def cmd_reproduce(args):
    if args.all:
        reports = sweep_mod.run_all()
    elif args.family:
        reports = sweep_mod.run_all(prefix=args.family)
    elif args.case:
        reports = [sweep_mod.run_case(args.case)]
    else:
        print("reproduce: give a case id, --family PREFIX, or --all", file=sys.stderr)
        return EXIT_PARSE
    os.makedirs(args.out_dir, exist_ok=True)
    ok = True
    for report in reports:
        path = os.path.join(args.out_dir, report.case_id + ".json")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
        status = "ok" if report.ok else "DIFF"
        print(f"{status:<5} {report.case_id} ({report.elapsed_ms} ms) -> {path}")
        ok = ok and report.ok
    return EXIT_OK if ok else 1


_A0_RULES = (
    ("d = 2 mod 4", "2", "Sp(d-2, 2)"),
    ("d = 0 mod 8", "2", "POmega+(d-2, 2)"),
    ("d = 4 mod 8", "2", "POmega-(d-2, 2)"),
    ("d = 1 or 7 mod 8", "2", "POmega+(d-1, 2)"),
    ("d = 3 or 5 mod 8", "2", "POmega-(d-1, 2)"),
    ("p does not divide d", "odd", "POmega(d-1, p), sign by discriminant"),
    ("p divides d", "odd", "POmega(d-2, p), sign by discriminant"),
)


def _not_large_expected(remark, q):
    if "fails the cube inequality" not in remark:
        return False
    if "when q is even" in remark:
        return q % 2 == 0
    return True


def cmd_tables(args):
    which = args.which.upper()
    if which == "A0":
        if args.json:
            print(json.dumps([{"d": r[0], "p": r[1], "host": r[2]}
                              for r in _A0_RULES], indent=2))
        else:
            for cond, p, host in _A0_RULES:
                print(f"{cond:<22} p {p:<4} {host}")
        return EXIT_OK
    rows = []
    flagged = False
    for row in catalog.table_rows(which):
        q = catalog._fixed_q(row.g0_pattern) or row.sample_q()
        got = row.instantiate(q)
        if got is None:
            continue
        g0, h0_name, h0_order = got
        g0_order = order(g0)
        in_g0 = is_large(g0_order, h0_order).is_large
        try:
            o1 = out_order(g0)
        except UnsupportedGroup:
            o1 = 1
        with_o1 = is_large(g0_order, h0_order, o1).is_large
        contradiction = in_g0 == _not_large_expected(row.remark, q)
        flagged = flagged or contradiction
        rows.append({
            "host": str(g0),
            "subgroup": h0_name,
            "h0_order": h0_order,
            "large_in_g0": in_g0,
            "large_with_o1": with_o1,
            "condition": row.condition,
            "remark": row.remark,
            "flag": "remark-contradiction" if contradiction else "",
        })
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        for r in rows:
            mark = " !!" if r["flag"] else ""
            note = "" if r["remark"] == "-" else f"  ({r['remark']})"
            print(f"{r['host']:<18} {r['subgroup']:<14} |H0|={r['h0_order']:<12} "
                  f"G0:{'large' if r['large_in_g0'] else 'not large'} "
                  f"O1:{'large' if r['large_with_o1'] else 'not large'}{note}{mark}")
    return EXIT_OK if not flagged else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _build_parser():
    top = argparse.ArgumentParser(
        prog="large-atlas",
        description="Exact arithmetic for large maximal subgroups of "
                    "finite classical groups.")
    sub = top.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("order", help="print the exact order of a group")
    p.add_argument("group")
    p.set_defaults(fn=cmd_order)

    p = sub.add_parser("out", help="print |Out(G0)|")
    p.add_argument("group")
    p.set_defaults(fn=cmd_out)

    def add_selector(p):
        p.add_argument("--class", dest="klass", help="Aschbacher class, e.g. C2")
        p.add_argument("--type", help="type descriptor or structure name")
        p.add_argument("--exceptional", choices=("sp4", "o8"),
                       help="graph-automorphism candidate list")
        p.add_argument("--item", help="1-based or roman index into the list")

    p = sub.add_parser("subgroups", help="list catalog entries for a host")
    p.add_argument("group")
    add_selector(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_subgroups)

    p = sub.add_parser("check", help="largeness verdict for one subgroup")
    p.add_argument("group")
    add_selector(p)
    p.add_argument("--h0-order", type=int, help="explicit |H0| instead of a selector")
    p.add_argument("--o", type=int, help="override the outer part order")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("explain", help="show the formula behind one entry")
    p.add_argument("group")
    add_selector(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_explain)

    p = sub.add_parser("sweep", help="run one sweep case against its golden")
    p.add_argument("case", nargs="?")
    p.add_argument("--list", action="store_true", help="list case ids")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("reproduce", help="run sweeps and write JSON reports")
    p.add_argument("case", nargs="?")
    p.add_argument("--all", action="store_true")
    p.add_argument("--family", help="case id prefix, e.g. psu")
    p.add_argument("--out-dir", default="reports")
    p.set_defaults(fn=cmd_reproduce)

    p = sub.add_parser("tables", help="re-emit a data table with verdicts")
    p.add_argument("which", choices=("A", "B", "A0", "a", "b", "a0"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_tables)

    return top


def main(argv=None):
    # group orders easily exceed the default digit cap for int printing,
    # and the contract is exact decimal output
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(2_000_000)
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except AmbiguousSelector as exc:
        print(f"error: {exc}", file=sys.stderr)
        for cand in exc.candidates:
            print(f"  candidate: {cand}", file=sys.stderr)
        return EXIT_AMBIGUOUS
    except (GroupParseError, NotAPrimePower, UnknownCase) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except MissingGolden as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISSING_GOLDEN
    except (UnsupportedGroup, ConstraintViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except LargeAtlasError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
