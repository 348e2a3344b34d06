"""Command-line front end.

Exit codes: 0 pass, 1 predicate or suite failure, 2 input error,
3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import files, properties, verifier
from .errors import NotALatticeError, OrderkitError, SizeLimitError
from .generators import named
from .poset import FinitePoset
from .scott import scott_closed_lattice, scott_opens

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3

_NAMED_INPUT = re.compile(r"^(M3|N5|(chain|antichain|boolean)\(\d+\))$")


def load_input(spec: str) -> FinitePoset:
    """A named instance, '-' for stdin, or a poset file path."""
    if _NAMED_INPUT.match(spec):
        return named(spec)
    if spec == "-":
        return files.parse(sys.stdin.read())
    return files.parse(Path(spec).read_text())


def _write_out(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _check_report(P, names):
    report = {"name": P.name, "n": P.n, "properties": {}, "witnesses": {}}
    lattice = None
    lattice_failed = False
    for prop in names:
        if prop in properties.POSET_PREDICATES:
            verdict = properties.POSET_PREDICATES[prop](P)
        else:
            if lattice is None and not lattice_failed:
                try:
                    lattice = P.as_lattice()
                except NotALatticeError:
                    lattice_failed = True
            if lattice is None:
                report["properties"][prop] = "skipped"
                continue
            verdict = properties.LATTICE_PREDICATES[prop](lattice)
        report["properties"][prop] = verdict.holds
        if not verdict.holds and verdict.witness is not None:
            report["witnesses"][prop] = verdict.witness.as_dict()
    return report


def _format_witness(w):
    parts = []
    if w["elements"]:
        parts.append("x=" + ",".join(w["elements"]))
    for s in w["subsets"]:
        parts.append("S={" + ",".join(s) + "}")
    if w["lhs"] is not None:
        parts.append(f"lhs={w['lhs']}")
    if w["rhs"] is not None:
        parts.append(f"rhs={w['rhs']}")
    return "; ".join(parts)


def cmd_check(args):
    P = load_input(args.input)
    if args.properties == "all":
        names = list(properties.PREDICATE_NAMES)
    else:
        names = [s.strip() for s in args.properties.split(",") if s.strip()]
        for prop in names:
            if prop not in properties.PREDICATE_NAMES:
                print(f"unknown property {prop!r}", file=sys.stderr)
                return EXIT_INPUT
    report = _check_report(P, names)
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(f"poset {P.name or '<unnamed>'} (n={P.n})")
        for prop in names:
            value = report["properties"][prop]
            shown = value if value == "skipped" else str(bool(value)).lower()
            line = f"  {prop}: {shown}"
            if args.witness and prop in report["witnesses"]:
                line += "   witness: " + _format_witness(report["witnesses"][prop])
            print(line)
    failed = any(v is False for v in report["properties"].values())
    if failed and not args.no_assert:
        return EXIT_FAIL
    return EXIT_PASS


def cmd_dual(args):
    P = load_input(args.input)
    family = scott_closed_lattice(P) if args.scott_closed else scott_opens(P)
    _write_out(files.emit(family.lattice.base), args.output)
    return EXIT_PASS


def cmd_enumerate(args):
    from .generators import enumerate_lattices, enumerate_posets

    evaluate = verifier.compile_expression(args.filter) if args.filter else None
    count = 0
    emitted = []
    stream = enumerate_lattices(args.n) if args.kind == "lattices" else enumerate_posets(args.n)
    for obj in stream:
        P = obj.base if hasattr(obj, "base") else obj
        if evaluate is not None and not evaluate(verifier.InstanceProfile(P)):
            continue
        count += 1
        if args.emit:
            emitted.append(P)
    if args.emit:
        out_dir = Path(args.emit)
        out_dir.mkdir(parents=True, exist_ok=True)
        for P in emitted:
            (out_dir / f"{P.name}.poset").write_text(files.emit(P))
    print(count)
    return EXIT_PASS


def _suite_dict(report, deterministic):
    def record(rec):
        out = {
            "name": rec.name,
            "n": rec.n,
            "poset": rec.text,
            "holds": rec.verdict.holds,
        }
        if rec.verdict.witness is not None:
            out["witness"] = rec.verdict.witness.as_dict()
        if rec.verdict.profile:
            out["profile"] = rec.verdict.profile_dict()
        return out

    out = {
        "suite": report.suite,
        "universe": report.universe,
        "instances": report.instances,
        "failures": [record(r) for r in report.failures],
        "expected_failures": [record(r) for r in report.expected_failures],
        "trivialized": list(report.trivialized),
        "pass": report.passed,
    }
    if not deterministic:
        out["wall_time"] = round(report.wall_time, 6)
    return out


def cmd_verify(args):
    suites = verifier.SUITE_ORDER if args.suite == "full" else (args.suite,)
    reports = [verifier.run_suite(s, args.max_n, jobs=args.jobs) for s in suites]
    if args.json:
        payload = {
            "max_n": args.max_n,
            "suites": [_suite_dict(r, args.deterministic) for r in reports],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for r in reports:
            line = (
                f"suite {r.suite}: {r.universe}, {r.instances} instances, "
                f"{len(r.failures)} failures"
            )
            if r.trivialized:
                line += " [trivialized at finite scale: " + ", ".join(r.trivialized) + "]"
            print(line)
            for rec in r.failures:
                w = rec.verdict.witness
                detail = f" ({_format_witness(w.as_dict())})" if w else ""
                print(f"  FAIL {rec.name} (n={rec.n}){detail}")
            for rec in r.expected_failures:
                w = rec.verdict.witness
                detail = f" ({_format_witness(w.as_dict())})" if w else ""
                print(f"  outside hypothesis, equation fails: {rec.name}{detail}")
    if any(r.failures for r in reports):
        return EXIT_FAIL
    return EXIT_PASS


def cmd_export_dot(args):
    P = load_input(args.input)
    _write_out(files.export_dot(P), args.output)
    return EXIT_PASS


def build_parser():
    parser = argparse.ArgumentParser(
        prog="orderkit",
        description="Finite poset and lattice toolkit: predicates, Scott "
        "topology duals, exhaustive verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run predicates on one poset")
    p.add_argument("input", help="poset file, '-' for stdin, or a named "
                   "instance such as M3, chain(4), boolean(2)")
    p.add_argument("--properties", default="all",
                   help="comma-separated predicate names, or 'all'")
    p.add_argument("--witness", action="store_true", help="show failure witnesses")
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-assert", action="store_true",
                   help="exit 0 even when a predicate is false")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("dual", help="emit the Scott open or closed set lattice")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--scott-opens", action="store_true", default=True)
    group.add_argument("--scott-closed", action="store_true", default=False)
    p.add_argument("input")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("enumerate", help="enumerate posets or lattices up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("posets", "lattices"), default="posets")
    p.add_argument("--filter", default=None, help="predicate expression, e.g. "
                   "'lattice & !distributive'")
    p.add_argument("--count", action="store_true", default=True,
                   help="print the count (default)")
    p.add_argument("--emit", metavar="DIR", default=None,
                   help="also write one poset file per instance into DIR")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run verification suites over enumerated universes")
    p.add_argument("--suite", default="full",
                   choices=verifier.SUITE_ORDER + ("full",))
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--deterministic", action="store_true",
                   help="omit wall times so identical runs are byte-identical")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", help="write the Hasse diagram in DOT syntax")
    p.add_argument("input")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"size limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except OrderkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
