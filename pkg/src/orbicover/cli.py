"""Command-line driver: ``orbicover <subcommand>``."""

from __future__ import annotations

import argparse
import json
import sys

from .enumeration import enumerate_cover_classes
from .errors import InconsistencyError, InvalidInputError
from .factor import holonomy_classify
from .mcg import signature_orbits
from .orbifold import Signature, parity_exclusion, signature_table, candidate_signatures
from .pipeline import (
    PipelineConfig,
    default_threads,
    format_table1,
    report_csv,
    report_json,
    report_text,
    run_case,
    run_pipeline,
)
from .verify import verify


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def _case_args(args) -> tuple[Signature, int]:
    sig = Signature.parse(args.signature)
    if (sig, args.degree) not in candidate_signatures():
        raise InvalidInputError(f"{sig} with degree {args.degree} is not a candidate pair")
    reason = parity_exclusion(sig, args.degree)
    if reason:
        raise InvalidInputError(f"{sig} with degree {args.degree} is excluded: {reason}")
    return sig, args.degree


def cmd_signatures(args) -> int:
    rows = signature_table()
    if args.json:
        _emit(_dump({"schema": 1, "table1": [r.to_json() for r in rows]}), args.out)
    else:
        _emit(format_table1(rows) + "\n", args.out)
    return 0


def cmd_enumerate(args) -> int:
    sig, degree = _case_args(args)
    classes = enumerate_cover_classes(sig, degree, partitions=max(1, args.threads))
    if args.json:
        _emit(_dump({"schema": 1, "classes": [c.to_json() for c in classes]}), args.out)
    else:
        lines = [f"{len(classes)} classes over {sig}, degree {degree}"]
        lines += [f"  {c.tuple}  [{c.group.label}]" for c in classes]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_orbits(args) -> int:
    sig, degree = _case_args(args)
    orbits = signature_orbits(enumerate_cover_classes(sig, degree), sig)
    if args.json:
        data = {"schema": 1, "signature": sig.to_json(), "degree": degree, "orbits": [o.to_json() for o in orbits]}
        _emit(_dump(data), args.out)
    else:
        lines = [f"{len(orbits)} orbits over {sig}, degree {degree}"]
        for o in orbits:
            lines.append(f"  {o.size} classes, {o.group.label}: {o.representative.tuple}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_classify(args) -> int:
    if args.signature:
        sig, degree = _case_args(args)
        cases = [run_case(sig, degree)]
    else:
        cases = run_pipeline(PipelineConfig(threads=args.threads)).cases
    records = []
    for case in cases:
        for o in case.orbits:
            records.append({
                "signature": case.signature.to_json(),
                "degree": case.degree,
                "representative": o.orbit.representative.tuple.cycles_string(),
                **holonomy_classify(o.orbit.representative).to_json(),
            })
    if args.json:
        _emit(_dump({"schema": 1, "classes": records}), args.out)
    else:
        lines = []
        for r in records:
            sig = Signature.from_json(r["signature"])
            flag = "holonomy" if r["holonomy"] else "not holonomy"
            lines.append(f"{sig} D={r['degree']}  [{r['representative']}]  {flag}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_report(args) -> int:
    report = run_pipeline(PipelineConfig(threads=args.threads))
    if args.format == "csv":
        _emit(report_csv(report), args.out)
    elif args.format == "text":
        _emit(report_text(report), args.out)
    else:
        _emit(report_json(report), args.out)
    return 0


def cmd_verify(args) -> int:
    result = verify(config=PipelineConfig(threads=args.threads))
    _emit("\n".join(result.lines()) + "\n", args.out)
    return 0 if result.passed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=default_threads(),
                        help="worker processes (results do not depend on this)")
    common.add_argument("--out", help="write output to this path instead of stdout")

    case = argparse.ArgumentParser(add_help=False)
    case.add_argument("--signature", help="orbifold signature as <genus>:<r1>,<r2>,...")
    case.add_argument("--degree", type=int)

    parser = argparse.ArgumentParser(prog="orbicover", description="Flexible covers by the genus-2 surface.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("signatures", parents=[common], help="candidate signatures and degrees")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_signatures)

    for name, func, text in (
        ("enumerate", cmd_enumerate, "conjugacy classes of monodromy tuples"),
        ("orbits", cmd_orbits, "mapping class group orbits"),
        ("classify", cmd_classify, "holonomy flags"),
    ):
        p = sub.add_parser(name, parents=[common, case], help=text)
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func, needs_case=name != "classify")

    p = sub.add_parser("report", parents=[common], help="full pipeline report")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    fmt.add_argument("--text", dest="format", action="store_const", const="text")
    p.set_defaults(func=cmd_report, format="json")

    p = sub.add_parser("verify", parents=[common], help="check against the published values")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "needs_case", False) and (args.signature is None or args.degree is None):
        parser.error(f"{args.command} needs --signature and --degree")
    if getattr(args, "signature", None) and getattr(args, "degree", None) is None:
        parser.error("--signature needs --degree")
    try:
        return args.func(args)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
