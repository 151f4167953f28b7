"""Command-line surface for the cross-ratio calculus and plane constructions.

Subcommands: eval, solve, verify, construct, desargues.  Exit codes are
stable: 0 success, 2 unparseable input or bad configuration, 3 violated
precondition, 4 a fourth point that exists only at infinity, 5 I/O failure.
A verification or Desargues run that completes but finds failures exits 1.
"""

from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import sys

from .fields import (
    DivisionByZeroError,
    Field,
    FieldMismatchError,
    RationalField,
    field_by_name,
)
from .plane import (
    AuxiliaryPointError,
    DegenerateConfigurationError,
    GenerationFailureError,
    HypothesisViolationError,
    IdenticalLinesError,
    IdenticalPointsError,
    NotOnLineError,
    PlanePoint,
    check_desargues,
    construct_product,
    construct_sum,
    default_aux,
    generate_desargues_config,
)
from .ratio import (
    CrossRatioArgumentError,
    ExtendedPoint,
    InfiniteSolutionError,
    InvalidRatioPointError,
    cross_ratio,
    solve_fourth_point,
)
from .svg import render_construction
from .verify import run_suite

_PRECONDITION_ERRORS = (
    CrossRatioArgumentError,
    InvalidRatioPointError,
    DivisionByZeroError,
    FieldMismatchError,
    IdenticalPointsError,
    IdenticalLinesError,
    NotOnLineError,
    AuxiliaryPointError,
    DegenerateConfigurationError,
)


def _parse_point(field: Field, text: str) -> PlanePoint:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"point literal must be 'x,y', got {text!r}")
    return PlanePoint(field.parse(parts[0]), field.parse(parts[1]))


def _parse_extended(field: Field, text: str) -> ExtendedPoint:
    if text.strip() == "inf":
        return ExtendedPoint.infinity(field)
    return ExtendedPoint.finite(field.parse(text))


def _emit(text: str, out: str | None) -> None:
    if out is None:
        print(text)
    else:
        with open(out, "w", encoding="utf-8") as sink:
            sink.write(text if text.endswith("\n") else text + "\n")


def _cmd_eval(args) -> int:
    field = field_by_name(args.field)
    points = [_parse_extended(field, lit) for lit in (args.A, args.B, args.C, args.D)]
    result = cross_ratio(*points)
    if args.fmt == "json":
        _emit(json.dumps({"field": field.name, "result": str(result)}), args.out)
    else:
        _emit(str(result), args.out)
    return 0


def _cmd_solve(args) -> int:
    field = field_by_name(args.field)
    r, a, b, c = (field.parse(lit) for lit in (args.R, args.A, args.B, args.C))
    d = solve_fourth_point(r, a, b, c)
    if args.fmt == "json":
        _emit(json.dumps({"field": field.name, "result": str(d)}), args.out)
    else:
        _emit(str(d), args.out)
    return 0


def _cmd_verify(args) -> int:
    field = field_by_name(args.field)
    report = run_suite(field, args.seed, args.samples)
    if args.fmt == "json":
        _emit(json.dumps(report, indent=2), args.out)
    else:
        lines = [f"field={report['field']} seed={report['seed']} samples={report['samples']}"]
        for check in report["checks"]:
            if check["skipped"]:
                lines.append(f"SKIP {check['name']}: {check['reason']}")
            elif check["passed"]:
                lines.append(
                    f"PASS {check['name']} "
                    f"({check['strategy']}, {check['samples_run']} samples, "
                    f"{check['redraws']} redraws)"
                )
            else:
                lines.append(
                    f"FAIL {check['name']}: {check['failures']} failures "
                    f"in {check['samples_run']} samples"
                )
                for witness in check["witnesses"]:
                    joined = ", ".join(witness["inputs"])
                    lines.append(
                        f"     witness: {joined} | lhs={witness['lhs']} rhs={witness['rhs']}"
                    )
        lines.append("suite passed" if report["passed"] else "suite FAILED")
        _emit("\n".join(lines), args.out)
    return 0 if report["passed"] else 1


def _cmd_construct(args) -> int:
    field = field_by_name(args.field)
    o = _parse_point(field, args.O)
    i = _parse_point(field, args.I)
    a = _parse_point(field, args.A)
    b = _parse_point(field, args.B)
    aux = _parse_point(field, args.aux) if args.aux else default_aux(o, i)
    build = construct_sum if args.op == "add" else construct_product
    trace = build(o, i, a, b, aux)
    if args.svg is not None:
        if not isinstance(field, RationalField):
            raise DegenerateConfigurationError(
                "SVG output is limited to the rational plane"
            )
        with open(args.svg, "w", encoding="utf-8") as sink:
            sink.write(render_construction(trace))
    if args.fmt == "json":
        payload = {
            "op": trace.kind,
            "field": field.name,
            "points": {name: str(p) for name, p in trace.points.items()},
            "lines": [[label, str(line)] for label, line in trace.lines],
            "result": str(trace.result),
            "value": str(trace.value),
        }
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        lines = []
        for label, line in trace.lines:
            lines.append(f"line [{label}]: {line}")
        lines.append(f"P1 = {trace.points['P1']}")
        lines.append(f"C has coordinate {trace.value}")
        lines.append(str(trace.result))
        _emit("\n".join(lines), args.out)
    return 0


def _tamper(cfg):
    one = cfg.c_prime.field.one
    moved = PlanePoint(cfg.c_prime.x + one, cfg.c_prime.y + one)
    return dataclasses.replace(cfg, c_prime=moved)


def _cmd_desargues(args) -> int:
    field = field_by_name(args.field)
    passes = 0
    failures = []
    canonicals = []
    for index in range(args.count):
        sub_seed = f"{args.seed}:{index}"
        try:
            cfg = generate_desargues_config(field, sub_seed, args.mode)
        except GenerationFailureError as exc:
            failures.append(f"config {index}: {exc}")
            continue
        if args.flip_c_prime:
            cfg = _tamper(cfg)
        canonicals.append(cfg.canonical())
        try:
            ok = check_desargues(cfg)
        except HypothesisViolationError as exc:
            failures.append(f"config {index}: {exc}")
            continue
        if ok:
            passes += 1
        else:
            failures.append(f"config {index}: conclusion fails: {cfg.canonical()}")
    digest = hashlib.sha256("\n".join(canonicals).encode()).hexdigest()[:16]
    if args.fmt == "json":
        payload = {
            "field": field.name,
            "mode": args.mode,
            "count": args.count,
            "passes": passes,
            "failures": failures,
            "config_hash": digest,
        }
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        lines = [f"{passes}/{args.count} pass", f"config-hash: {digest}"]
        lines.extend(failures)
        _emit("\n".join(lines), args.out)
    return 0 if passes == args.count else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="rational", help="rational | gf:P | quaternion")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=1000)
    common.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    common.add_argument("--out", default=None, help="write output to this path")

    parser = argparse.ArgumentParser(
        prog="crossratio",
        description="Exact cross-ratio calculus and plane constructions over skew fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common], help="cross-ratio of four points")
    for name in "ABCD":
        p_eval.add_argument(name, help="element literal, or 'inf' in one slot")
    p_eval.set_defaults(handler=_cmd_eval)

    p_solve = sub.add_parser("solve", parents=[common], help="fourth point for a ratio value")
    for name in "RABC":
        p_solve.add_argument(name, help="element literal")
    p_solve.set_defaults(handler=_cmd_solve)

    p_verify = sub.add_parser("verify", parents=[common], help="run the identity suites")
    p_verify.set_defaults(handler=_cmd_verify)

    p_construct = sub.add_parser(
        "construct", parents=[common], help="trace a ruler construction on an axis"
    )
    p_construct.add_argument("op", choices=("add", "mul"))
    p_construct.add_argument("--O", required=True, help="axis zero point 'x,y'")
    p_construct.add_argument("--I", required=True, help="axis unit point 'x,y'")
    p_construct.add_argument("--A", required=True, help="first operand point 'x,y'")
    p_construct.add_argument("--B", required=True, help="second operand point 'x,y'")
    p_construct.add_argument("--aux", default=None, help="auxiliary off-axis point 'x,y'")
    p_construct.add_argument("--svg", default=None, help="write an SVG figure here")
    p_construct.set_defaults(handler=_cmd_construct)

    p_des = sub.add_parser(
        "desargues", parents=[common], help="generate and check perspective triangles"
    )
    p_des.add_argument("--count", type=int, default=200)
    p_des.add_argument("--mode", choices=("parallel", "concurrent"), default="parallel")
    p_des.add_argument(
        "--flip-c-prime",
        "--flip-C'",
        dest="flip_c_prime",
        action="store_true",
        help="negative control: corrupt C' before checking",
    )
    p_des.set_defaults(handler=_cmd_desargues)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except InfiniteSolutionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except _PRECONDITION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
