"""Command-line front end.

Exit codes: 0 certified / success, 1 refuted or bad input, 2 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence

from . import deduction, invariants
from .presentation import (
    Stage,
    UnsupportedDegree,
    coxeter_presentation,
    e10_appendix_presentation,
    quotient_star,
    star_presentation,
)
from .symverify import Certificate, presentation_for, verify
from .todd_coxeter import DEFAULT_MAX_COSETS
from .words import Word

EXIT_OK, EXIT_REFUTED, EXIT_INCONCLUSIVE = 0, 1, 2


def _write(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=1) + "\n"


def _degrees(args) -> list[int]:
    if args.range:
        return list(invariants.parse_range(args.range))
    if args.n is None:
        raise SystemExit("error: give --n or --range")
    return [args.n]


def cmd_present(args) -> int:
    stage = Stage(args.stage.upper())
    if args.fixture == "appendix":
        if args.n != 10:
            raise UnsupportedDegree("the appendix fixture exists only for n = 10")
        p = e10_appendix_presentation()
        if stage is Stage.STAR:
            p = quotient_star(p)
        elif stage is Stage.COXETER:
            raise ValueError("the appendix fixture has FULL and STAR stages only")
    elif stage is Stage.STAR:
        p = star_presentation(args.n)
    elif stage is Stage.COXETER:
        p = coxeter_presentation(args.n)
    else:
        raise ValueError("the FULL stage exists only as the n = 10 appendix fixture "
                         "(--fixture appendix)")
    _write(p.to_text(), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    ns = _degrees(args)

    def one(n: int):
        return verify(presentation_for(n), args.method, args.max_cosets, args.strategy)

    if len(ns) > 1:
        with ThreadPoolExecutor(args.workers) as ex:
            results = list(ex.map(one, ns))
    else:
        results = [one(ns[0])]
    reports = [r.to_dict() for r in results]
    if args.hom_details:
        for rep, r in zip(reports, results):
            rep["relators"] = r.hom.to_list()
    _write(_json(reports[0] if len(reports) == 1 else reports), args.output)
    if args.method == "hom":
        return EXIT_OK if all(r.hom.ok for r in results) else EXIT_REFUTED
    certs = {r.certificate for r in results}
    if Certificate.REFUTED in certs:
        return EXIT_REFUTED
    if Certificate.INCONCLUSIVE in certs:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_deduce(args) -> int:
    rels = [Word.parse(t) for t in args.relator]
    report = deduction.deduction_suite(args.n, rels, args.max_cosets, args.strategy)
    _write(_json(report.to_dict()), args.output)
    if report.ok:
        return EXIT_OK
    return EXIT_INCONCLUSIVE if report.inconclusive else EXIT_REFUTED


def cmd_invariants(args) -> int:
    out = {n: invariants.invariant_report(n) for n in _degrees(args)}
    _write(_json(out[args.n] if args.n is not None and not args.range else out), args.output)
    return EXIT_OK


def cmd_table(args) -> int:
    _write(invariants.emit_table(invariants.parse_range(args.range), args.format), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="zappatic", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, n_required=False):
        sp.add_argument("--n", type=int, required=n_required)
        sp.add_argument("--output", "-o")

    def enum_flags(sp):
        sp.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
        sp.add_argument("--strategy", choices=["hlt", "felsch"], default="hlt")

    sp = sub.add_parser("present", help="write a presentation in relator text format")
    common(sp, n_required=True)
    sp.add_argument("--stage", choices=["full", "star", "coxeter"], default="star")
    sp.add_argument("--fixture", choices=["appendix"])
    sp.set_defaults(func=cmd_present)

    sp = sub.add_parser("verify", help="certify G^n_* = S_n")
    common(sp)
    sp.add_argument("--range")
    sp.add_argument("--method", choices=["order", "coset", "hom"], default="order")
    sp.add_argument("--workers", type=int, default=2)
    sp.add_argument("--hom-details", action="store_true", help="include per-relator results")
    enum_flags(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("deduce", help="check derived relators by order equality")
    common(sp, n_required=True)
    sp.add_argument("--relator", action="append", default=[],
                    help="relator tokens, e.g. \"5 9 -5 -9\"; repeatable")
    enum_flags(sp)
    sp.set_defaults(func=cmd_deduce)

    sp = sub.add_parser("invariants", help="curve and Chern data as JSON")
    common(sp)
    sp.add_argument("--range")
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("table", help="invariant table over a range of n")
    sp.add_argument("--range", default="4..30")
    sp.add_argument("--format", choices=["md", "csv", "json"], default="md")
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_table)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REFUTED


if __name__ == "__main__":
    sys.exit(main())
