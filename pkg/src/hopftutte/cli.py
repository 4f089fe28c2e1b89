"""Command-line entry point: ``compute`` polynomials of a record file, ``verify`` identity suites."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import delta_matroid as dm
from .errors import HopfTutteError, ParseError
from .graph import tutte_graph
from .harness import run_suite, suite_names
from .lasvergnas import lv_of_ribbon
from .matroid import lv_tutte, tutte_matroid
from .minor_system import ENGINES, MinorObject, alpha_compute
from .poly import Polynomial
from .records import ParsedObject, load
from .ribbon_polys import (
    krushkal,
    partitioned_br,
    ribbon_br2,
    ribbon_br3,
    ribbon_penrose2,
    ribbon_penrose_classic,
)

POLYNOMIALS = ("tutte", "lv", "br2", "br3", "br-partitioned", "krushkal", "penrose2", "penrose", "alpha")


class Unsupported(HopfTutteError):
    pass


def _tutte(obj: ParsedObject) -> Polynomial:
    if obj.kind == "matroid":
        return tutte_matroid(obj.payload)
    if obj.kind == "graph":
        return tutte_graph(obj.payload)
    if obj.kind == "ribbon":
        return tutte_graph(obj.payload.underlying_graph())
    raise Unsupported(f"tutte is not defined for a {obj.kind}")


def _polynomial(obj: ParsedObject, name: str) -> Polynomial:
    k, X = obj.kind, obj.payload
    if name == "tutte":
        return _tutte(obj)
    table = {
        ("lv", "perspective"): lambda: lv_tutte(X),
        ("lv", "ribbon"): lambda: lv_of_ribbon(X),
        ("br2", "delta-matroid"): lambda: dm.br2(X),
        ("br2", "ribbon"): lambda: ribbon_br2(X),
        ("br3", "delta-matroid"): lambda: dm.br3(X),
        ("br3", "ribbon"): lambda: ribbon_br3(X),
        ("br-partitioned", "ribbon"): lambda: partitioned_br(X, obj.partition),
        ("krushkal", "ribbon"): lambda: krushkal(X),
        ("penrose2", "delta-matroid"): lambda: dm.penrose2(X),
        ("penrose2", "ribbon"): lambda: ribbon_penrose2(X),
        ("penrose", "delta-matroid"): lambda: dm.penrose_poly(X),
        ("penrose", "ribbon"): lambda: ribbon_penrose_classic(X),
    }
    try:
        build = table[name, k]
    except KeyError:
        raise Unsupported(f"{name} is not defined for a {k}") from None
    return build()


def _system_object(obj: ParsedObject, tag: str | None) -> MinorObject:
    from .embedded import PartitionedRibbon, SurfaceGraph

    if tag is None:
        tag = "partitioned-ribbon" if obj.kind == "ribbon" and obj.partition is not None else obj.kind
    X = obj.payload
    if tag == "partitioned-ribbon":
        X = PartitionedRibbon(X, obj.partition)
    elif tag == "partitioned-cellular":
        X = SurfaceGraph(X, None, obj.partition)
    return MinorObject(tag, X)


def _parse_lambda(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {text!r}", field="--lambda") from None


def cmd_compute(args, out) -> int:
    obj = load(args.object)
    if args.polynomial == "alpha":
        p = alpha_compute(_system_object(obj, args.system), engine=args.engine)
    else:
        p = _polynomial(obj, args.polynomial)
    record: dict = {"polynomial": args.polynomial, "object": obj.kind}
    if args.polynomial == "penrose" and args.lam is not None:
        value = p.evaluate({"lam": _parse_lambda(args.lam)})
        print(value, file=out)
        record.update({"lambda": args.lam, "value": str(value)})
    else:
        print(p, file=out)
        record["terms"] = p.to_records()
        if args.polynomial in ("br2", "penrose2"):
            # also show x, y when the shift back stays polynomial
            try:
                plain = dm.unshift(p)
            except HopfTutteError:
                plain = None
            if plain is not None:
                print(f"in x, y: {plain}", file=out)
                record["unshifted"] = plain.to_records()
    print(json.dumps(record, sort_keys=True), file=out)
    return 0


def cmd_verify(args, out) -> int:
    report = run_suite(args.suite, max_elements=args.max_elements, seed=args.seed)
    print(report.summary(), file=out)
    if args.json_report:
        with open(args.json_report, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopftutte", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute a polynomial of an object record")
    c.add_argument("--object", required=True, metavar="FILE", help="JSON object record")
    c.add_argument("--polynomial", required=True, choices=POLYNOMIALS)
    c.add_argument("--lambda", dest="lam", metavar="Q", help="evaluate penrose at a rational")
    c.add_argument("--engine", default="delcon", choices=sorted(ENGINES), help="engine for alpha")
    c.add_argument("--system", help="system tag for alpha (default: from the record type)")

    v = sub.add_parser("verify", help="run an identity suite")
    v.add_argument("--suite", required=True, choices=suite_names())
    v.add_argument("--max-elements", type=int, default=4, metavar="N")
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--json-report", metavar="FILE")
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        if args.command == "compute":
            return cmd_compute(args, out)
        return cmd_verify(args, out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HopfTutteError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
