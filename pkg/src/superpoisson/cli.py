"""Command line: ``superpoisson verify|construct|ybe|search``.

Reports go to stdout as one record per line, JSON objects with ``--format json`` and
plain lines otherwise.  Exit status is 0 when everything holds, 1 when violations were
found and 2 for usage, parse and precondition errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .formats import FormatError, parse, serialize
from .graded import PAIRINGS, use_pairing
from .report import PreconditionError, Report
from .suites import (SUITES, UsageError, construct, encode, grid_search, parse_grid, run_suite,
                     violation_record, ybe_report)
from .fixtures import P2_PARAMS

CONSTRUCTIONS = ("double", "semidirect", "bowtie", "dualize", "post", "post-quasi")


class Emitter:
    def __init__(self, fmt: str, out=None):
        self.fmt = fmt
        self.out = out or sys.stdout

    def record(self, rec: dict, text: str):
        if self.fmt == "json":
            print(json.dumps(rec, ensure_ascii=False), file=self.out)
        else:
            print(text, file=self.out)

    def report(self, report: Report, **context):
        for v in report:
            rec = violation_record(v, **context)
            self.record(rec, f"violation {v.law} at {rec['witness']}: {json.dumps(rec['discrepancy'], ensure_ascii=False)}")

    def summary(self, name: str, report: Report, **context):
        verdict = "pass" if report.ok else "fail"
        self.record({"record": "summary", **context, "ok": report.ok, "violations": len(report)},
                    f"{verdict} {name}" + ("" if report.ok else f" ({len(report)} violations)"))


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _load(path: str):
    try:
        return parse(_read(path))
    except FormatError as exc:
        raise FormatError(f"{path} {exc.location}".strip(), exc.message) from None


def cmd_verify(args, em: Emitter) -> int:
    doc = _load(args.file)
    report, code = run_suite(doc, args.suite)
    em.report(report, suite=args.suite)
    em.summary(args.suite, report, suite=args.suite)
    return code


def cmd_ybe(args, em: Emitter) -> int:
    doc = _load(args.file)
    report = ybe_report(doc, args.which)
    em.report(report, equation=args.which)
    em.summary(args.which, report, equation=args.which)
    return 0 if report.ok else 1


def cmd_construct(args, em: Emitter) -> int:
    docs = [_load(p) for p in args.files]
    doc = construct(args.kind, docs, T=args.T, weight=args.weight)
    text = serialize(doc)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_search(args, em: Emitter) -> int:
    spec = parse_grid(_read(args.grid))
    if args.bound is not None:
        spec = type(spec)(spec.values, spec.predicate, args.bound)
    found = grid_search(spec, jobs=args.jobs)
    for t in found:
        values = dict(zip(P2_PARAMS, encode(t)))
        em.record({"record": "tuple", "values": values}, " ".join(f"{k}={v}" for k, v in values.items()))
    em.record({"record": "summary", "predicate": spec.predicate, "evaluated": spec.size, "passed": len(found)},
              f"{len(found)} of {spec.size} tuples pass {spec.predicate}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superpoisson", description=__doc__.splitlines()[0])
    parser.add_argument("--pairing", choices=PAIRINGS, default="koszul",
                        help="sign rule for pairing tensor products with their duals")
    parser.add_argument("--format", choices=("json", "text"), default="text", help="record format on stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a named suite on a structure file")
    p.add_argument("--suite", required=True, choices=list(SUITES))
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build a new structure file")
    p.add_argument("kind", choices=CONSTRUCTIONS)
    p.add_argument("files", nargs="+")
    p.add_argument("--T", help="'id' to use the identity as the operator")
    p.add_argument("--weight", help="operator weight, e.g. \"-1\" or \"1/2\"")
    p.add_argument("-o", "--output", help="write the file here instead of stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("ybe", help="evaluate a Yang-Baxter equation at the file's r")
    p.add_argument("--which", required=True, choices=("cybe", "aybe", "pybe"))
    p.add_argument("file")
    p.set_defaults(func=cmd_ybe)

    p = sub.add_parser("search", help="scan the two-dimensional parameter family")
    p.add_argument("--grid", required=True)
    p.add_argument("--bound", type=int, help="maximum number of tuples (default 10^6)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    em = Emitter(args.format)
    try:
        with use_pairing(args.pairing):
            return args.func(args, em)
    except (FormatError, UsageError, PreconditionError, OSError, ValueError) as exc:
        em.record({"record": "error", "kind": type(exc).__name__, "message": str(exc)}, f"error: {exc}")
        report = getattr(exc, "report", None)
        if report:
            em.report(report)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
