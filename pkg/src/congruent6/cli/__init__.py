"""Command-line front end.

Every command builds a report document ``{command, inputs, results, failures}``.
It is printed as text by default, as JSON with ``--json``, and written to
``--out`` when given. Exit status: 0 success, 1 a check failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from ..congruence import (
    PROPERTY_BOUND,
    ap_mod_n_check,
    default_bound,
    mod2_type_check,
    reverse6_pipeline,
)
from ..elliptic import Curve
from ..exact.rat import format_rat, parse_rat
from ..families import family2, family3
from ..models import SELECTORS, canonical_model, jacobian_consistency
from ..morphisms import (
    birational_coordinates,
    forgetful_6to3_direct,
    isogeny_f,
    iso_g,
    map6to3_reverse,
    map_to_CXminus,
    minors_chi2,
)
from .records import CurveRecord, RecordError, batch_ingest, parse_records, serialize
from .suites import SUITES, run_suite

__all__ = ["CurveRecord", "RecordError", "batch_ingest", "cmd_dispatch", "main",
           "parse_records", "serialize"]

PROG = "congruent6"
_NEG_VALUE = re.compile(r"^-\d+(/\d+)?(,.*)?$")


class UsageError(Exception):
    """Bad command line; reported in one line with exit status 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def glue_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``-a -8/27`` into ``-a=-8/27`` so argparse does not read the value
    as an option."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (tok.startswith("-") and not _NEG_VALUE.match(tok) and "=" not in tok
                and i + 1 < len(argv) and _NEG_VALUE.match(argv[i + 1])):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _rat_list(text: str) -> list:
    try:
        return [parse_rat(part) for part in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rat(text: str):
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _pair(text: str):
    vals = _rat_list(text)
    if len(vals) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated fractions, got {text!r}")
    return tuple(vals)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog=PROG, description="Exact constructions and oracles for 6-congruent elliptic curves.")
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.add_argument("--out", type=Path, help="also write the JSON report to this file")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def curve_args(sp, required=True):
        sp.add_argument("-a", type=_rat, required=required, help="coefficient a (fraction string)")
        sp.add_argument("-b", type=_rat, required=required, help="coefficient b (fraction string)")

    sp = sub.add_parser("model", help="print a model attached to E")
    sp.add_argument("which", choices=SELECTORS)
    curve_args(sp)

    sp = sub.add_parser("family", help="print a member of a congruent family")
    sp.add_argument("kind", choices=("2", "3d", "3r"))
    curve_args(sp)
    sp.add_argument("--param", type=_pair, required=True, help="u,v or lam,mu")

    sp = sub.add_parser("map", help="apply an explicit map to a point")
    sp.add_argument("name", choices=tuple(MAPS))
    curve_args(sp, required=False)
    sp.add_argument("--point", type=_rat_list, required=True, help="comma-separated coordinates")

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("suite", choices=(*SUITES, "all"))

    sp = sub.add_parser("search", help="run a reverse 6-congruence pipeline")
    sp.add_argument("--example", choices=("4.9", "4.10"), required=True)
    sp.add_argument("--t", type=_rat, action="append", default=[], help="parameter t (repeatable)")
    sp.add_argument("--uv", type=_pair, action="append", default=[], help="parameter u,v (repeatable)")
    sp.add_argument("--bound", type=int, help="prime bound (default: $CONGRUENT6_PRIME_BOUND or 1000)")
    sp.add_argument("--table", action="store_true", help="include the a_p table")

    sp = sub.add_parser("batch", help="run an oracle over a JSON file of curves")
    sp.add_argument("--in", dest="path", type=Path, required=True)
    sp.add_argument("--check", choices=("mod6", "mod2", "jacobians"), required=True)
    sp.add_argument("--bound", type=int)
    return p


# -- commands ------------------------------------------------------------------

def _curve_inputs(args) -> dict:
    return {"a": format_rat(args.a), "b": format_rat(args.b)}


def cmd_model(args) -> dict:
    E = Curve(args.a, args.b)
    model = canonical_model(E, args.which)
    return {"inputs": {**_curve_inputs(args), "which": args.which},
            "results": [{"model": str(model), "coefficients": model.to_dict()}], "failures": []}


def cmd_family(args) -> dict:
    E = Curve(args.a, args.b)
    s, t = args.param
    if args.kind == "2":
        F = family2(E, s, t)
    else:
        F = family3(E, s, t, "direct" if args.kind == "3d" else "reverse")
    return {"inputs": {**_curve_inputs(args), "kind": args.kind,
                       "param": [format_rat(s), format_rat(t)]},
            "results": [{"curve": str(F), "coefficients": F.to_dict()}], "failures": []}


def _weierstrass_map(factory):
    def apply(E, point):
        rm = factory(E)
        bind = dict(zip(rm.source_vars, point))
        y, rhs = rm.source_square
        if point[1] ** 2 != rhs.evaluate(bind):
            raise ValueError(f"point is not on the source curve of {rm.name} ({rm.source})")
        return rm.apply(point)
    return apply


# name -> (arity, needs curve, function)
MAPS = {
    "f": (2, True, _weierstrass_map(isogeny_f)),
    "g": (2, True, _weierstrass_map(iso_g)),
    "v": (2, True, _weierstrass_map(forgetful_6to3_direct)),
    "reverse": (6, False, lambda E, P: map6to3_reverse(P)),
    "chi2": (6, False, lambda E, P: minors_chi2(P)),
    "cxminus": (6, False, lambda E, P: map_to_CXminus(P)),
    "birational": (6, False, lambda E, P: birational_coordinates(P)),
}


def cmd_map(args) -> dict:
    arity, needs_curve, fn = MAPS[args.name]
    if len(args.point) != arity:
        raise UsageError(f"map {args.name} takes {arity} coordinates, got {len(args.point)}")
    E = None
    inputs = {"name": args.name, "point": [format_rat(c) for c in args.point]}
    if needs_curve:
        if args.a is None or args.b is None:
            raise UsageError(f"map {args.name} needs -a and -b")
        E = Curve(args.a, args.b)
        inputs.update(_curve_inputs(args))
    image = fn(E, tuple(args.point))
    return {"inputs": inputs, "results": [{"image": [format_rat(c) for c in image]}], "failures": []}


def cmd_verify(args) -> dict:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = [run_suite(n) for n in names]
    failures = [f"{r.suite}: {c.name}" for r in results for c in r.checks if not c.passed]
    return {"inputs": {"suite": args.suite}, "results": [r.to_dict() for r in results],
            "failures": failures}


def cmd_search(args) -> dict:
    if args.example == "4.9":
        if args.uv:
            raise UsageError("--uv belongs to --example 4.10")
        params = args.t or [parse_rat("9/2")]
    else:
        if args.t:
            raise UsageError("--t belongs to --example 4.9")
        if not args.uv:
            raise UsageError("--example 4.10 needs at least one --uv u,v")
        params = args.uv
    bound = args.bound or default_bound()
    run = reverse6_pipeline(params, bound)
    results = [r.to_dict(include_table=args.table) for r in run]
    failures = [f"{r.context['param']}: not congruent mod 6 at p = {r.first_failure}"
                for r in run if not r.all_congruent]
    if not run.reports:
        failures.append("every parameter was degenerate")
    labels = [",".join(format_rat(c) for c in p) if isinstance(p, tuple) else format_rat(p)
              for p in params]
    return {"inputs": {"example": args.example, "bound": bound, "params": labels},
            "results": results, "skipped": run.skipped, "failures": failures}


def cmd_batch(args) -> dict:
    records = batch_ingest(args.path)
    if not records:
        raise RecordError(f"{args.path}: no records")
    results, failures = [], []

    def label(i: int, r: CurveRecord) -> str:
        return r.label or f"#{i}"

    if args.check == "jacobians":
        bound = args.bound or default_bound()
        for i, r in enumerate(records):
            rep = jacobian_consistency(r.curve, bound)
            results.append({"label": label(i, r), **rep.to_dict()})
            if not rep.all_equal:
                failures.append(f"{label(i, r)}: point counts differ from the Jacobians")
    else:
        n = 6 if args.check == "mod6" else 2
        bound = args.bound or (default_bound() if n == 6 else PROPERTY_BOUND)
        E = records[0].curve
        for i, r in enumerate(records[1:], start=1):
            rep = ap_mod_n_check(E, r.curve, n, bound)
            entry = {"label": label(i, r), "against": label(0, records[0]), **rep.to_dict()}
            ok = rep.all_congruent
            if n == 2:
                split = mod2_type_check(E, r.curve, bound)
                entry["splitting_types_agree"] = split.agree
                ok = ok and split.agree
            results.append(entry)
            if not ok:
                failures.append(f"{label(i, r)}: fails the {args.check} check against {label(0, records[0])}")
    return {"inputs": {"path": str(args.path), "check": args.check, "bound": bound,
                       "records": [r.to_json() for r in records]},
            "results": results, "failures": failures}


COMMANDS = {"model": cmd_model, "family": cmd_family, "map": cmd_map, "verify": cmd_verify,
            "search": cmd_search, "batch": cmd_batch}


# -- text rendering ---------------------------------------------------------------

def render_text(doc: dict) -> str:
    cmd, results = doc["command"], doc["results"]
    lines: list[str] = []
    if cmd == "model":
        lines.append(results[0]["model"])
    elif cmd == "family":
        lines.append(results[0]["curve"])
    elif cmd == "map":
        lines.append("(" + ", ".join(results[0]["image"]) + ")")
    elif cmd == "verify":
        for suite in results:
            for c in suite["checks"]:
                lines.append(f"{'PASS' if c['passed'] else 'FAIL'}  {suite['suite']}: {c['name']}  [{c['detail']}]")
    elif cmd == "search":
        for r in results:
            ctx = r["context"]
            lines.append(f"param {ctx['param']}: E = {Curve(r['E']['a'], r['E']['b'])}")
            lines.append(f"  point {' : '.join(ctx['point'])}")
            lines.append(f"  F = {Curve(r['F']['a'], r['F']['b'])}")
            lines.append(f"  a_p(E) = a_p(F) mod 6 for all {r['primes_tested']} good p <= bound: "
                         f"{r['all_congruent']}")
            w = r["nonisogeny_witness"]
            lines.append(f"  non-isogeny witness: p = {w}" if w else "  isogeny not excluded")
        for s in doc.get("skipped", []):
            lines.append(f"skipped {s['param']}: {s['reason']}")
    elif cmd == "batch":
        for r in results:
            if "all_congruent" in r:
                extra = "" if "splitting_types_agree" not in r else f", splitting types agree: {r['splitting_types_agree']}"
                lines.append(f"{r['label']} vs {r['against']}: congruent mod {r['n']}: {r['all_congruent']}{extra}")
            else:
                lines.append(f"{r['label']}: Jacobian counts agree: {r['all_equal']}")
    for f in doc["failures"]:
        lines.append(f"failure: {f}")
    return "\n".join(lines)


@dataclass
class Dispatch:
    status: int
    doc: dict | None = None
    diagnostic: str = ""
    as_json: bool = False
    out: Path | None = None


def cmd_dispatch(argv: Sequence[str]) -> Dispatch:
    """Parse and run one command without printing anything."""
    try:
        args = build_parser().parse_args(glue_negative_values(list(argv)))
        body = COMMANDS[args.command](args)
    except UsageError as exc:
        return Dispatch(2, diagnostic=f"{PROG}: usage error: {exc}")
    except (ValueError, ArithmeticError) as exc:
        return Dispatch(2, diagnostic=f"{PROG}: error: {exc}")
    doc = {"command": args.command, "inputs": body.pop("inputs"),
           "results": body.pop("results"), "failures": body.pop("failures"), **body}
    return Dispatch(1 if doc["failures"] else 0, doc, "", args.json, args.out)


def main(argv: Sequence[str] | None = None) -> int:
    run = cmd_dispatch(sys.argv[1:] if argv is None else argv)
    if run.doc is None:
        print(run.diagnostic, file=sys.stderr)
        return run.status
    text = json.dumps(run.doc, indent=2)
    if run.out is not None:
        try:
            run.out.write_text(text + "\n")
        except OSError as exc:
            print(f"{PROG}: error: cannot write {run.out}: {exc.strerror}", file=sys.stderr)
            return 2
    print(text if run.as_json else render_text(run.doc))
    return run.status
