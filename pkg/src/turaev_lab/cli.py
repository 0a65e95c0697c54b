"""Command line front end: ``turaev-lab <command> ...``.

Exit codes: 0 success, 1 invalid input, 2 budget exhausted, 3 a reproduction
check failed.  Errors go to stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from . import bracket as bracket_mod
from .diagram import Diagram, parse_orientation, parse_pd, reorient
from .errors import BudgetExceeded, MoveError, PDError, SplitDiagramError
from .family import FamilyParams, components_by_parity, family_report, generate, strict_grid
from .jones import jones
from .kauffman2 import DEFAULT_NODE_BUDGET, kauffman_report
from .reidemeister import MOVES, analysis_rows
from .reproduce import CHECKS, run_check
from .turaev import certify_genus_two, turaev_genus_diagram

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_CHECK = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _positive(text: str) -> int:
    val = int(text)
    if val <= 0:
        raise argparse.ArgumentTypeError("budget must be positive")
    return val


def _load_diagram(args) -> Diagram:
    if args.family:
        d = generate(FamilyParams.parse(args.family))
        if args.orient:
            flips = [k - 1 for k, v in parse_orientation(args.orient).items() if v < 0]
            d = reorient(d, flips)
        return d
    if not args.input:
        raise InputError("give a PD file (or - for stdin) or --family r,s,t,u,v")
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
    return parse_pd(text, args.orient)


def _emit(obj, fmt: str, text_lines=None) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    else:
        for line in text_lines if text_lines is not None else _flatten(obj):
            print(line)


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}{k}." if not isinstance(v, (dict, list)) or v else f"{prefix}{k}")
    elif isinstance(obj, list) and obj and all(isinstance(x, (dict, list)) for x in obj):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}{i}.")
    else:
        yield f"{prefix.rstrip('.')}: {obj}"


def cmd_bracket(args) -> int:
    d = _load_diagram(args)
    br = bracket_mod.bracket(d, args.budget_states)
    out = {"crossings": d.n, "writhe": d.writhe, "bracket": br.to_text(), "terms": br.to_json()}
    if not br.is_zero():
        out["max_deg"] = br.max_exp()
        out["min_deg"] = br.min_exp()
    try:
        b = bracket_mod.degree_bounds(d)
        out["bounds"] = {"M": b.M, "m": b.m, "sA": b.sA, "sB": b.sB, "note": "normalized bracket lies in [m+2, M-2]"}
    except SplitDiagramError:
        out["bounds"] = None
    if args.groups:
        if d.regions is None:
            raise InputError("--groups needs a diagram from --family")
        out["groups"] = {}
        for name, poly in bracket_mod.grouped_state_sums(d, args.budget_states).items():
            degs = None if poly.is_zero() else [poly.max_exp(), poly.min_exp()]
            out["groups"][name] = {"max_min": degs, "sum": poly.to_text()}
    _emit(out, args.format)
    return EXIT_OK


def cmd_jones(args) -> int:
    d = _load_diagram(args)
    rep = jones(d, args.budget_states)
    out = {"crossings": d.n, "writhe": d.writhe, "components": len(d.components)}
    out.update(rep.to_dict())
    _emit(out, args.format)
    return EXIT_OK


def cmd_genus(args) -> int:
    d = _load_diagram(args)
    rep = turaev_genus_diagram(d)
    out = rep.to_dict()
    if d.n <= args.budget_states and d.n > 0:
        cert = certify_genus_two(d, jones(d, args.budget_states))
        out["genus_two_certificate"] = cert.to_dict()
    _emit(out, args.format)
    return EXIT_OK


def cmd_kauffman2(args) -> int:
    d = _load_diagram(args)
    rep = kauffman_report(d, args.budget_skein_nodes)
    out = {"crossings": d.n, "writhe": d.writhe}
    out.update(rep.to_dict())
    _emit(out, args.format)
    return EXIT_OK


_RANGE = re.compile(r"([rstuv])=(\d+)(?:\.\.(\d+))?")


def _grid(text: str, max_c: int | None) -> list[FamilyParams]:
    if text == "strict":
        return strict_grid(max_c)
    ranges = {}
    for item in text.split(","):
        m = _RANGE.fullmatch(item.strip())
        if not m:
            raise InputError(f"bad grid item {item!r}; use strict or r=a..b,s=a..b,...")
        lo = int(m.group(2))
        hi = int(m.group(3)) if m.group(3) else lo
        ranges[m.group(1)] = range(lo, hi + 1)
    missing = [k for k in "rstuv" if k not in ranges]
    if missing:
        raise InputError(f"grid is missing {', '.join(missing)}")
    out = []
    for r in ranges["r"]:
        for s in ranges["s"]:
            for t in ranges["t"]:
                for u in ranges["u"]:
                    for v in ranges["v"]:
                        p = FamilyParams(r, s, t, u, v)
                        if max_c is None or p.crossings <= max_c:
                            out.append(p)
    return out


CSV_FIELDS = [
    "r", "s", "t", "u", "v", "parity", "components", "table_components",
    "c", "writhe", "span", "gT", "delta", "s_plus_v_minus_2", "strict", "checks_ok",
]


def cmd_family(args) -> int:
    if bool(args.params) == bool(args.grid):
        raise InputError("give exactly one of --params and --grid")
    params = [FamilyParams.parse(args.params)] if args.params else _grid(args.grid, args.max_c)
    reports = [family_report(p, args.budget_states, raise_on_mismatch=False) for p in params]
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in reports] if args.grid else reports[0].to_dict(), indent=2))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        for rep in reports:
            p = rep.params
            w.writerow({
                "r": p.r, "s": p.s, "t": p.t, "u": p.u, "v": p.v,
                "parity": "/".join("odd" if x % 2 else "even" for x in p.as_tuple()),
                "components": rep.components,
                "table_components": components_by_parity(p),
                "c": rep.c, "writhe": rep.writhe, "span": rep.span, "gT": rep.gT, "delta": rep.delta,
                "s_plus_v_minus_2": p.s + p.v - 2,
                "strict": p.strict,
                "checks_ok": rep.ok,
            })
        sys.stdout.write(buf.getvalue())
    else:
        for rep in reports:
            failed = [k for k, v in rep.checks.items() if v["applies"] and not v["ok"]]
            print(
                f"D{rep.params.as_tuple()}: c={rep.c} w={rep.writhe} span={rep.span} gT={rep.gT} "
                f"delta={rep.delta} components={rep.components}"
                + (f" failed={','.join(failed)}" if failed else "")
            )
    return EXIT_OK


def cmd_moves(args) -> int:
    rows = analysis_rows(args.analyze)
    if args.format == "json":
        print(json.dumps(rows, indent=2))
        return EXIT_OK
    fields = ["closure", "case", "variant", "delta_c", "delta_sA", "delta_sB", "delta_gT"]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fields, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    sys.stdout.write(buf.getvalue())
    return EXIT_OK


def cmd_reproduce(args) -> int:
    if args.list:
        for name in CHECKS:
            print(name)
        return EXIT_OK
    names = list(CHECKS) if args.all or not args.check else args.check
    for n in names:
        if n not in CHECKS:
            raise InputError(f"unknown check {n!r}; see reproduce --list")
    results = [run_check(n) for n in names]
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in results], indent=2))
    else:
        for r in results:
            print(r.line())
            if args.verbose:
                for line in r.details:
                    print(f"    {line}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="turaev-lab", description="Exact knot invariants from PD codes.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, formats=("json", "text"), default="json"):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--budget-states", type=_positive, default=bracket_mod.DEFAULT_BUDGET,
                       help="largest crossing count for 2^c state enumeration (default %(default)s)")
        p.add_argument("--budget-skein-nodes", type=_positive, default=DEFAULT_NODE_BUDGET,
                       help="node limit for the Kauffman skein recursion (default %(default)s)")

    def diagram_input(p):
        p.add_argument("input", nargs="?", help="PD code file, or - for stdin")
        p.add_argument("--family", metavar="R,S,T,U,V", help="use the family diagram instead of a file")
        p.add_argument("--orient", help="reverse components, e.g. c2=-")

    for name, fn, help_ in (
        ("bracket", cmd_bracket, "Kauffman bracket and degree bounds"),
        ("jones", cmd_jones, "Jones polynomial, span and extreme coefficients"),
        ("genus", cmd_genus, "Turaev genus of the diagram and the genus-two certificate"),
        ("kauffman2", cmd_kauffman2, "two-variable Kauffman polynomial"),
    ):
        p = sub.add_parser(name, help=help_)
        diagram_input(p)
        common(p)
        if name == "bracket":
            p.add_argument("--groups", action="store_true", help="grouped partial state sums (family diagrams)")
        p.set_defaults(func=fn)

    p = sub.add_parser("family", help="reports for D(r,s,t,-u,-v)")
    p.add_argument("--params", metavar="R,S,T,U,V")
    p.add_argument("--grid", help="strict, or r=a..b,s=a..b,t=a..b,u=a..b,v=a..b")
    p.add_argument("--max-c", type=_positive, default=None)
    common(p, ("json", "csv", "text"), "json")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("moves", help="closure analysis of a Reidemeister move")
    p.add_argument("--analyze", required=True, choices=MOVES)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_moves)

    p = sub.add_parser("reproduce", help="run the named reproduction checks")
    p.add_argument("--check", action="append", help="check name (repeatable)")
    p.add_argument("--all", action="store_true")
    p.add_argument("--list", action="store_true")
    p.add_argument("--verbose", "-v", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_reproduce)
    return ap


def _fail(kind: str, message: str, code: int) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": message, "exit_code": code}) + "\n")
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        return _fail("budget_exceeded", str(exc), EXIT_BUDGET)
    except (InputError, PDError, SplitDiagramError, MoveError, ValueError) as exc:
        return _fail(type(exc).__name__, str(exc), EXIT_INPUT)


if __name__ == "__main__":
    sys.exit(main())
