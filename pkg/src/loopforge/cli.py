"""Command-line front end.

Exit codes: 0 = requested properties hold, 1 = a property fails,
2 = malformed input, 3 = search/classification budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import elements, iso, structure
from .audit import audit
from .classify import classify_order16, classify_order27
from .core import InvalidTableError, LoopTable, direct_product
from .families import family16, family27, poly2_4, poly16
from .files import LoopFileError, load, save
from .search import DEFAULT_BUDGET, SearchSpec, search
from .tables import cyclic, dihedral8, elem_abelian2, quaternion8, table1, table2

CHECK_LAWS = ("lcc", "rcc", "cc", "pa", "wip", "moufang", "extra", "flex",
              "aip", "diassoc")


def _load_or_die(path: str) -> LoopTable:
    try:
        return load(path)
    except FileNotFoundError:
        print("error: no such file: %s" % path, file=sys.stderr)
        sys.exit(2)
    except (LoopFileError, InvalidTableError) as exc:
        print("error: %s: %s" % (path, exc), file=sys.stderr)
        sys.exit(2)


def _cmd_check(args) -> int:
    q = _load_or_die(args.file)
    laws = [tok.strip() for tok in args.laws.split(",") if tok.strip()]
    for law in laws:
        if law not in CHECK_LAWS:
            print("error: unknown law %r (choose from %s)"
                  % (law, ",".join(CHECK_LAWS)), file=sys.stderr)
            return 2
    results = {}
    for law in laws:
        bad = elements.law_counterexample(q, law)
        results[law] = {"holds": bad is None,
                        "counterexample": list(bad) if bad else None}
    ok = all(r["holds"] for r in results.values())
    if args.json:
        print(json.dumps({"file": args.file, "n": q.n, "laws": results}, indent=1))
    else:
        for law, r in results.items():
            line = "%-8s %s" % (law, "ok" if r["holds"] else "FAIL")
            if r["counterexample"]:
                line += "  counterexample %s" % (tuple(r["counterexample"]),)
            print(line)
    return 0 if ok else 1


def _cmd_info(args) -> int:
    q = _load_or_die(args.file)
    rep = elements.classify_elements(q)
    st = structure.structure_report(q)
    if args.json:
        print(json.dumps({"name": q.name, "n": q.n,
                          "classes": rep.as_dict(), "structure": st.as_dict()},
                         indent=1))
        return 0
    print("loop %s of order %d" % (q.name or "?", q.n))
    flags = vars(rep.flags)
    print("flags:   " + " ".join(k for k, v in flags.items() if v))
    for label, val in (("pa", rep.pa_set), ("wip", rep.wip_set),
                       ("moufang", rep.moufang_set), ("pseudo", rep.pseudo_set),
                       ("extra", rep.extra_set),
                       ("sq-nuclear", rep.square_nuclear_set)):
        print("%-11s %s" % (label + ":", sorted(val)))
    print("nucleus:    %s" % (list(st.nucleus.elements),))
    print("center:     %s" % (list(st.center.elements),))
    print("assoc-subloop: %s" % (list(st.associator_subloop.elements),))
    print("|Mlt| = %d, |Inn| = %d" % (st.mlt_group_order, st.innmap_group_order))
    if st.quotient_by_nucleus is not None:
        print("|Q/N| = %d, exponent %s"
              % (st.quotient_by_nucleus.n, st.exponent_quotient))
    return 0


def _gen_family(token: str) -> LoopTable:
    head, _, rest = token.partition(":")
    if head == "cyclic":
        return cyclic(int(rest))
    if head == "elem2":
        return elem_abelian2(int(rest))
    if head == "dihedral8":
        return dihedral8()
    if head == "quaternion8":
        return quaternion8()
    if head == "product":
        left, _, right = rest.partition(",")
        return direct_product(_gen_family(left), _gen_family(right))
    if head == "q16":
        r, s = (int(v) for v in rest.split(","))
        return family16(r, s)
    if head == "fam27":
        p = [int(v) for v in rest.split(",")]
        if len(p) != 5:
            raise ValueError("fam27 takes five parameters")
        return family27(*p)
    if head == "table1":
        return table1()
    if head == "table2":
        return table2()
    if head == "poly16":
        r, s = (int(v) for v in rest.split(","))
        return poly16(r, s)
    if head == "poly2_4":
        return poly2_4()
    raise ValueError("unknown family %r" % token)


def _cmd_gen(args) -> int:
    try:
        q = _gen_family(args.family)
    except (ValueError, IndexError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    save(q, args.output)
    return 0


def _cmd_iso(args) -> int:
    q1 = _load_or_die(args.file1)
    q2 = _load_or_die(args.file2)
    witness = iso.are_isomorphic(q1, q2)
    if witness is None:
        print("not isomorphic")
        return 1
    print(" ".join(str(v) for v in witness.images))
    return 0


def _cmd_classify(args) -> int:
    if args.order == 27:
        rep = classify_order27()
        print(json.dumps(rep.as_dict(), indent=1))
        classes = [c.rep for c in rep.classes]
        prefix = "order27"
    else:
        rep = classify_order16(long=args.long, budget=args.budget,
                               jobs=args.jobs)
        print(json.dumps(rep.as_dict(), indent=1))
        if args.long and not rep.search_complete:
            print("search budget exhausted; census incomplete", file=sys.stderr)
            return 3
        classes = rep.classes
        prefix = "order16"
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, q in enumerate(sorted(classes, key=lambda t: t.canonical_str()), 1):
            save(q.renamed("%s_class%d" % (prefix, i)),
                 outdir / ("%s_class%d.tbl" % (prefix, i)))
    return 0


def _cmd_search(args) -> int:
    budget = args.budget
    if budget is None:
        budget = float(os.environ.get("LOOPFORGE_BUDGET", DEFAULT_BUDGET))
    try:
        spec = SearchSpec(
            n=args.order,
            laws=frozenset(t.strip() for t in args.laws.split(",") if t.strip()),
            nonassociative_only=args.nonassociative,
            up_to_iso=args.up_to_iso,
            count_only=args.count_only,
            limit=args.limit,
            budget=budget,
            jobs=args.jobs,
        )
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    result = search(spec)
    if args.count_only:
        print(result.count)
    else:
        print("found %d table(s) in %.1fs (%d nodes)"
              % (result.count, result.elapsed, result.nodes))
        for q in result.tables:
            print(q.canonical_str(), end="")
            print()
    if not result.complete:
        print("budget exhausted: result covers only part of the space",
              file=sys.stderr)
        return 3
    return 0


def _cmd_audit(args) -> int:
    q = _load_or_die(args.file)
    rep = audit(q)
    if args.json:
        print(json.dumps(rep.as_dict(), indent=1))
    else:
        print("audit of %s (n=%d): cc=%s pa=%s wip=%s"
              % (q.name or args.file, q.n, rep.is_cc, rep.is_pa, rep.is_wip))
        for c in rep.checks:
            line = "%-42s %s" % (c.name, c.status.upper())
            if c.counterexample:
                line += "  at %r" % (c.counterexample,)
            print(line)
    return 0 if rep.ok else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="loopforge",
        description="Cayley-table calculus for finite loops")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test equational laws on a table file")
    p.add_argument("file")
    p.add_argument("--laws", default="cc",
                   help="comma list from: %s" % ",".join(CHECK_LAWS))
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("info", help="element classes and structure report")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_info)

    p = sub.add_parser("gen", help="generate a named family member")
    p.add_argument("family",
                   help="cyclic:n | elem2:k | dihedral8 | quaternion8 | "
                        "product:A,B | q16:r,s | fam27:t,a,b,g,d | table1 | "
                        "table2 | poly16:r,s | poly2_4")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("iso", help="isomorphism test; prints a witness")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(fn=_cmd_iso)

    p = sub.add_parser("classify", help="reproduce the order-16/27 census")
    p.add_argument("order", type=int, choices=(16, 27))
    p.add_argument("--out", help="directory for canonical class tables")
    p.add_argument("--long", action="store_true",
                   help="include the search census (order 16)")
    p.add_argument("--budget", type=float, default=1800.0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("search", help="law-constrained exhaustive search")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--laws", default="")
    p.add_argument("--nonassociative", action="store_true")
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--limit", type=int)
    p.add_argument("--budget", type=float,
                   help="seconds (default %s or LOOPFORGE_BUDGET)" % DEFAULT_BUDGET)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("audit", help="run every applicable structural check")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_audit)

    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
