"""``tenval`` command line: eval, verify, decompose, info."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import io
from .polytope import GeometryError, polar
from .valuations import KINDS, ValuationDescriptor, evaluate
from .verify import SUITES, RankDeficient, decompose, run_suite


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tenval", description="Exact SL(n) covariant tensor valuations on polytopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate a valuation on a polytope file")
    ev.add_argument("--valuation", choices=KINDS, help="valuation kind")
    ev.add_argument("--p", type=int, help="rank, for moment / lp_normal")
    ev.add_argument("--r", type=int, default=0)
    ev.add_argument("--s", type=int, default=0)
    ev.add_argument("--polar", action="store_true", help="evaluate on the polar body")
    ev.add_argument("--rho", action="store_true", help="apply the quarter turn to the output")
    ev.add_argument("--descriptor", help="descriptor JSON (inline or @file); overrides the flags above")
    ev.add_argument("--input", required=True, help="polytope JSON file, or - for stdin")

    ve = sub.add_parser("verify", help="run verification suites")
    ve.add_argument("--suite", default="all", choices=["all"] + list(SUITES))
    ve.add_argument("--cases", type=int, default=30)
    ve.add_argument("--seed", type=int, default=0)

    de = sub.add_parser("decompose", help="decompose samples against the valuation basis")
    de.add_argument("--input", required=True, help="samples JSON file, or - for stdin")

    info = sub.add_parser("info", help="facets, supports and polar vertices of a polytope")
    info.add_argument("--input", required=True)

    for p in (ev, ve, de, info):
        p.add_argument("--float", action="store_true", help="print 20-digit decimals instead of exact rationals")
        p.add_argument("--output", help="write to this file instead of stdout")
    return parser


def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _descriptor(args) -> ValuationDescriptor:
    if args.descriptor:
        text = args.descriptor
        obj = _load_json(text[1:]) if text.startswith("@") else json.loads(text)
        return io.descriptor_from_json(obj)
    if not args.valuation:
        raise UsageError("give --valuation or --descriptor")
    obj = {"kind": args.valuation, "r": args.r, "s": args.s,
           "polar_input": args.polar, "rho_output": args.rho}
    if args.p is not None:
        obj["p"] = args.p
        obj.pop("r"), obj.pop("s")
    return io.descriptor_from_json(obj)


def _run(args) -> tuple[object, int]:
    fmt = io.decimal_str if args.float else io.rational_str
    if args.command == "eval":
        desc = _descriptor(args)
        P = io.polytope_from_json(_load_json(args.input))
        return io.eval_output(evaluate(desc, P), fmt), 0
    if args.command == "verify":
        seed = int(os.environ.get("TENVAL_SEED", args.seed))
        reports = run_suite(args.suite, args.cases, seed)
        return [r.to_json() for r in reports], 0 if all(r.passed for r in reports) else 1
    if args.command == "decompose":
        n, p, samples = io.samples_from_json(_load_json(args.input))
        out = decompose(samples, n, p)
        body = out.to_json()
        body["coefficients"] = [fmt(c) for c in out.coefficients]
        body["residual_norm2"] = fmt(out.residual_norm2)
        return body, 0 if out.residual_norm2 == 0 else 1
    P = io.polytope_from_json(_load_json(args.input))
    body = io.polytope_to_json(P)
    body["vertices"] = [[fmt(x) for x in v] for v in P.vertices]
    body["volume"] = fmt(P.volume())
    body["facets"] = [{"normal": [fmt(x) for x in f.normal], "support": fmt(f.support),
                       "vertex_ids": list(f.vertex_ids)} for f in P.facets]
    try:
        body["polar_vertices"] = [[fmt(x) for x in v] for v in polar(P).vertices]
    except GeometryError as exc:
        body["polar_vertices"] = None
        body["polar_error"] = str(exc)
    return body, 0


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        body, code = _run(args)
    except (UsageError, GeometryError, RankDeficient, ValueError, TypeError, KeyError) as exc:
        msg = str(exc) if not isinstance(exc, KeyError) else f"missing field {exc}"
        print(f"tenval: error: {msg}", file=sys.stderr)
        return 2
    text = json.dumps(body, indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
