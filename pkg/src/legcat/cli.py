"""Command-line front end: ``legcat {variety, ext, compose, verify}``.

Exit codes: 0 success, 1 a verification check failed, 2 bad input (parse or
field), 3 budget exceeded, 4 a point outside the variety, 5 a composition of
two degree-1 classes.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
from fractions import Fraction

from .braid import BraidWord, is_knot, parse_braid
from .category import Category
from .errors import BudgetExceeded, FieldError, IllegalDegree, InvalidPoint, ParseError, ShapeError
from .exactlin import Field, parse_field
from .goldens import check_all
from .invariants import Report, knot_dimension_check, verify_composition_laws, verify_euler
from .variety import DEFAULT_BUDGET, enumerate_variety

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_BUDGET, EXIT_POINT, EXIT_DEGREE = 0, 1, 2, 3, 4, 5


# -- formatting ---------------------------------------------------------------


def fmt_elem(x) -> str:
    return str(x)


def fmt_tuple(v) -> str:
    return "(" + ",".join(fmt_elem(x) for x in v) + ")"


def parse_tuple(text: str, K: Field | None = None) -> tuple:
    """Inverse of :func:`fmt_tuple`; also accepts a bare comma list."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    s = s.replace(" ", "")
    if not s:
        return ()
    try:
        vals = [Fraction(tok) for tok in s.split(",")]
    except ValueError:
        raise ParseError(f"cannot read {text!r} as a tuple of field elements") from None
    if K is None:
        return tuple(int(v) if v.denominator == 1 else v for v in vals)
    return tuple(K(v) for v in vals)


def braid_json(w: BraidWord) -> dict:
    return {"n": w.n, "w": list(w.gens)}


def field_json(K: Field) -> dict:
    return {"p": K.p if K.is_finite else "Q"}


def hom_json(cat: Category, i: int, j: int) -> dict:
    H = cat.hom(i, j)
    K = cat.field
    return {
        "pair": [i, j],
        "ext0": [[K.to_json(x) for x in u] for u in H.ext0_basis],
        "ext1_dim": H.ext1_dim,
        "complement": [r + 1 for r in H.cokernel.complement_rows],
    }


def render_variety_text(doc: dict) -> str:
    lines = [
        f"braid:  n={doc['braid']['n']}; w={','.join(map(str, doc['braid']['w']))}",
        f"field:  {doc['field']['p']}",
        f"points: {len(doc['points'])}",
    ]
    lines += [f"  {fmt_tuple(p)}" for p in doc["points"]]
    return "\n".join(lines)


def render_homs_text(doc: dict) -> str:
    lines = [render_variety_text(doc)]
    header = f"  {'pair':<10}{'ext0':>5}{'ext1':>5}  {'complement':<12}ext0 basis"
    lines += ["homs:", header]
    for h in doc["homs"]:
        pair = f"F{h['pair'][0] + 1}->F{h['pair'][1] + 1}"
        basis = " ".join(fmt_tuple(u) for u in h["ext0"]) or "-"
        comp = fmt_tuple(h["complement"])
        lines.append(f"  {pair:<10}{len(h['ext0']):>5}{h['ext1_dim']:>5}  {comp:<12}{basis}")
    return "\n".join(lines)


def parse_homs_text(text: str) -> dict:
    """Read the output of :func:`render_homs_text` (or the variety renderer) back into JSON form."""
    doc: dict = {"points": []}
    mode = None
    for line in text.splitlines():
        if line.startswith("braid:"):
            m = re.match(r"braid:\s*n=(\d+);\s*w=([\d,]*)", line)
            doc["braid"] = {"n": int(m.group(1)), "w": [int(x) for x in m.group(2).split(",") if x]}
        elif line.startswith("field:"):
            v = line.split(":", 1)[1].strip()
            doc["field"] = {"p": int(v) if v.isdigit() else v}
        elif line.startswith("points:"):
            mode = "points"
        elif line.startswith("homs:"):
            mode = "homs"
            doc["homs"] = []
        elif mode == "points" and line.strip():
            doc["points"].append(list(parse_tuple(line)))
        elif mode == "homs" and line.strip().startswith("F"):
            fields = line.split()
            a, b = fields[0].split("->")
            basis = [] if fields[4] == "-" else [list(parse_tuple(t)) for t in fields[4:]]
            doc["homs"].append(
                {
                    "pair": [int(a[1:]) - 1, int(b[1:]) - 1],
                    "ext0": basis,
                    "ext1_dim": int(fields[2]),
                    "complement": list(parse_tuple(fields[3])),
                }
            )
    return doc


def render_report_text(rep: Report, verbose: bool = False) -> str:
    status = "PASS" if rep.passed else "FAIL"
    lines = [f"{status} {rep.name} [{rep.braid} over {rep.field}]: {len(rep.records) - len(rep.failures)}/{len(rep.records)} checks"]
    for r in rep.records:
        if verbose or not r.passed:
            mark = "ok  " if r.passed else "FAIL"
            extra = "" if r.passed else f"  expected={json.dumps(r.expected)} observed={json.dumps(r.observed)}"
            lines.append(f"  {mark} {r.check:<28} {r.subject}{extra}")
    return "\n".join(lines)


# -- commands -----------------------------------------------------------------


def _emit(args, doc: dict, text: str):
    if args.format == "json":
        print(json.dumps(doc, sort_keys=True))
    else:
        print(text)


def _point_list(K: Field, w: BraidWord, specs: list[str]) -> list[tuple]:
    pts = []
    for s in specs:
        p = parse_tuple(s, K)
        if len(p) != w.length:
            raise InvalidPoint(f"{fmt_tuple(p)} has {len(p)} entries; {w} needs {w.length}")
        pts.append(p)
    return pts


def cmd_variety(args) -> int:
    K, w = args.field, args.braid
    pts = enumerate_variety(K, w, reduced=args.reduced, budget=args.budget, workers=args.workers)
    doc = {"braid": braid_json(w), "field": field_json(K), "points": [[K.to_json(x) for x in p] for p in pts]}
    _emit(args, doc, render_variety_text(doc))
    return EXIT_OK


def cmd_ext(args) -> int:
    K, w = args.field, args.braid
    if args.points:
        pts = _point_list(K, w, args.points)
        if len(pts) != 2:
            raise ParseError("ext takes exactly two points (source and target) or none")
        cat = Category(K, w, pts)
        pairs = [(0, 1)]
    else:
        pts = enumerate_variety(K, w, reduced=args.reduced, budget=args.budget, workers=args.workers)
        cat = Category(K, w, pts)
        pairs = [(i, j) for i in range(len(pts)) for j in range(len(pts))]
    doc = {
        "braid": braid_json(w),
        "field": field_json(K),
        "points": [[K.to_json(x) for x in p] for p in pts],
        "homs": [hom_json(cat, i, j) for i, j in pairs],
    }
    text = render_homs_text(doc)
    if args.format == "text":
        text += f"\neuler characteristic (each pair): {w.n - w.length}"
    _emit(args, doc, text)
    return EXIT_OK


def cmd_compose(args) -> int:
    K, w = args.field, args.braid
    db, da = args.degrees
    if da + db >= 2:
        raise IllegalDegree(
            "Ext^2 vanishes for these categories (hereditary-type property), "
            "so two degree-1 classes cannot be composed"
        )
    pts = _point_list(K, w, args.points)
    if len(pts) != 3:
        raise ParseError("compose takes three points F G Q for b o a with a: F->G, b: G->Q")
    cat = Category(K, w, pts)
    H_ab, H_bc = cat.hom(0, 1), cat.hom(1, 2)
    a_coords, b_coords = parse_tuple(args.a, K), parse_tuple(args.b, K)
    a = H_ab.ext0_class(a_coords) if da == 0 else H_ab.ext1_class(a_coords)
    b = H_bc.ext0_class(b_coords) if db == 0 else H_bc.ext1_class(b_coords)
    c = cat.compose(0, 1, 2, b, a)
    doc = {
        "braid": braid_json(w),
        "field": field_json(K),
        "points": [[K.to_json(x) for x in p] for p in pts],
        "degrees": [db, da],
        "b": [K.to_json(x) for x in b.coords],
        "a": [K.to_json(x) for x in a.coords],
        "result": {
            "degree": c.degree,
            "coords": [K.to_json(x) for x in c.coords],
            "representative": [K.to_json(x) for x in c.payload],
        },
    }
    text = "\n".join(
        [
            render_variety_text(doc),
            f"b (degree {db}): {fmt_tuple(doc['b'])}",
            f"a (degree {da}): {fmt_tuple(doc['a'])}",
            f"b o a (degree {c.degree}): {fmt_tuple(doc['result']['coords'])}  "
            f"representative {fmt_tuple(doc['result']['representative'])}",
        ]
    )
    _emit(args, doc, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    K = args.field
    rng = random.Random(args.seed)
    if args.suite == "tables":
        if not (K.is_finite and K.p == 2):
            raise FieldError("the reference tables are over Z/2; use --field 2")
        reports = check_all()
    else:
        if args.braid is None:
            raise ParseError(f"verify {args.suite} needs --braid")
        w = args.braid
        if not K.is_finite:
            raise FieldError("verification suites enumerate points and need a finite field")
        if args.suite == "euler":
            reports = [verify_euler(K, w, samples=args.samples, rng=rng, budget=args.budget)]
        elif args.suite == "knot":
            if not is_knot(w):
                raise ParseError(f"{w} closes to a link with several components, not a knot")
            reports = [knot_dimension_check(K, w, budget=args.budget)]
        else:
            reports = [verify_composition_laws(K, w, samples=args.samples, rng=rng, budget=args.budget)]
    passed = all(r.passed for r in reports)
    doc = {"suite": args.suite, "passed": passed, "reports": [r.to_dict() for r in reports]}
    _emit(args, doc, "\n".join(render_report_text(r, args.verbose) for r in reports))
    return EXIT_OK if passed else EXIT_FAIL


# -- argument parsing -----------------------------------------------------------


def _budget(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"budget must be an integer, got {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError("budget must be positive")
    return v


def _field(text: str) -> Field:
    try:
        return parse_field(text)
    except (ParseError, FieldError, ValueError) as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _braid(text: str) -> BraidWord:
    try:
        return parse_braid(text)
    except (ParseError, ValueError) as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _degrees(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*([01])\s*,\s*([01])\s*", text)
    if not m:
        raise argparse.ArgumentTypeError("degrees are 'b,a' with each 0 or 1")
    return int(m.group(1)), int(m.group(2))


def default_budget() -> int:
    env = os.environ.get("LEGCAT_BUDGET")
    return _budget(env) if env else DEFAULT_BUDGET


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default=None, help="prime p or Q")
    common.add_argument("--braid", type=_braid, default=None, help='e.g. "n=3; w=1,2,1"')
    common.add_argument("--budget", type=_budget, default=None, help="work budget (default $LEGCAT_BUDGET or 1e8)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    common.add_argument("--reduced", action="store_true", help="restrict to the reduced slice")
    common.add_argument("--workers", type=int, default=1, help="processes for enumeration")

    parser = argparse.ArgumentParser(prog="legcat", description="Sheaf categories of rainbow-closed positive braids.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("variety", parents=[common], help="enumerate the braid variety")
    p.set_defaults(func=cmd_variety)

    p = sub.add_parser("ext", parents=[common], help="Ext^0 and Ext^1 for two points, or for all pairs")
    p.add_argument("points", nargs="*", help="source and target points, e.g. 0,1,0")
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("compose", parents=[common], help="compose b o a for points F G Q")
    p.add_argument("points", nargs=3, help="points F G Q")
    p.add_argument("--degrees", type=_degrees, default=(0, 0), help="degrees 'b,a'")
    p.add_argument("--b", required=True, help="coordinates of b in the chosen basis of Ext(G,Q)")
    p.add_argument("--a", required=True, help="coordinates of a in the chosen basis of Ext(F,G)")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=("euler", "knot", "tables", "composition-laws"))
    p.add_argument("--samples", type=int, default=None, help="random instances instead of an exhaustive sweep")
    p.add_argument("--verbose", action="store_true", help="list passing checks too")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget is None:
        try:
            args.budget = default_budget()
        except argparse.ArgumentTypeError as e:
            parser.error(f"LEGCAT_BUDGET: {e}")
    if args.field is None:
        if args.command == "verify" and args.suite == "tables":
            args.field = parse_field("2")
        else:
            parser.error("--field is required")
    if args.braid is None and args.command != "verify":
        parser.error("--braid is required")
    try:
        return args.func(args)
    except IllegalDegree as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DEGREE
    except InvalidPoint as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_POINT
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, FieldError, ShapeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
