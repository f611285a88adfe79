"""Command-line front end.

Exit codes: 0 solvable (or batch processed), 1 unsolvable, 2 usage or input
error, 3 internal inconsistency between the two decision routes.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any, Sequence

from legendre_ternary.hasse import LocalVerdict, TernaryForm
from legendre_ternary.legendre import (
    ConditionBReport,
    DecisionReport,
    InconsistencyError,
    NormalizedForm,
    ResidueCondition,
    Transform,
    decide,
)
from legendre_ternary.solver import Solution
from legendre_ternary.symbols import REAL, Place

SCHEMA_VERSION = "1"

EXIT_SOLVABLE = 0
EXIT_UNSOLVABLE = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3


class InputError(ValueError):
    pass


def _place_to_json(v: Place) -> str | int:
    return "real" if v.is_real else v.p


def _place_from_json(v: str | int) -> Place:
    return REAL if v == "real" else Place(int(v))


def report_to_dict(r: DecisionReport) -> dict[str, Any]:
    canon = r.canonical.coefficients
    return {
        "input": list(r.input.coefficients),
        "normalized": list(r.normalized.form.coefficients),
        "transform": [r.normalized.transform.mx, r.normalized.transform.my, r.normalized.transform.mz],
        "permutation": list(r.permutation),
        "condition_a": r.condition_a,
        "condition_b": {
            "holds": r.condition_b.holds,
            "entries": [
                {
                    "coefficient": m,
                    "modulus": e.modulus,
                    "target": e.target,
                    "legendre": [{"prime": p, "value": v} for p, v in e.legendre],
                    "witness": e.witness,
                    "holds": e.holds,
                }
                for m, e in zip(canon, r.condition_b.entries)
            ],
        },
        "local": [
            {
                "place": _place_to_json(v.place),
                "hasse": v.hasse,
                "reference": v.reference,
                "solvable": v.solvable,
            }
            for v in r.local
        ],
        "solvable": r.solvable,
        "witness": None if r.witness is None else list(r.witness),
    }


def report_from_dict(d: dict[str, Any]) -> DecisionReport:
    cb = ConditionBReport(
        tuple(
            ResidueCondition(
                e["modulus"],
                e["target"],
                tuple((s["prime"], s["value"]) for s in e["legendre"]),
                e["witness"],
            )
            for e in d["condition_b"]["entries"]
        )
    )
    return DecisionReport(
        input=TernaryForm(*d["input"]),
        normalized=NormalizedForm(TernaryForm(*d["normalized"]), Transform(*d["transform"])),
        permutation=tuple(d["permutation"]),
        condition_a=d["condition_a"],
        condition_b=cb,
        local=tuple(
            LocalVerdict(_place_from_json(v["place"]), v["hasse"], v["reference"]) for v in d["local"]
        ),
        solvable=d["solvable"],
        witness=None if d["witness"] is None else Solution(*d["witness"]),
    )


def envelope(r: DecisionReport, elapsed_ms: float) -> dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "timing_ms": elapsed_ms, "report": report_to_dict(r)}


def _fmt(t: Sequence[int]) -> str:
    return "(" + ", ".join(str(v) for v in t) + ")"


def format_text(r: DecisionReport, local_detail: bool = False) -> str:
    verdict = "solvable" if r.solvable else "unsolvable"
    lines = [f"{_fmt(r.input.coefficients)}: {verdict}"]
    if r.normalized.form != r.input or r.permutation != (0, 1, 2):
        t = r.normalized.transform
        lines.append(
            f"  normalized {_fmt(r.normalized.form.coefficients)}"
            f", multipliers {_fmt((t.mx, t.my, t.mz))}, order {_fmt(r.permutation)}"
        )
    lines.append(f"  condition A: {'holds' if r.condition_a else 'fails (one sign)'}")
    lines.append(f"  condition B: {'holds' if r.condition_b.holds else 'fails'}")
    for m, e in zip(r.canonical.coefficients, r.condition_b.entries):
        bad = [p for p, v in e.legendre if v != 1]
        if bad:
            lines.append(f"    {e.target} is not a square mod {', '.join(map(str, bad))} (coefficient {m})")
        elif e.odd_modulus > 1:
            lines.append(f"    {e.witness}^2 = {e.target} mod {e.odd_modulus} (coefficient {m})")
    if local_detail:
        for v in r.local:
            state = "ok" if v.solvable else "obstructed"
            lines.append(f"  place {v.place}: S = {v.hasse:+d}, (-1,-1) = {v.reference:+d}  {state}")
    if r.witness is not None:
        lines.append(f"  witness: {_fmt(r.witness)}")
    return "\n".join(lines)


def _parse_int(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise InputError(f"invalid integer {text!r}") from None


def _parse_triple(fields: Sequence[str]) -> tuple[int, int, int]:
    if len(fields) != 3:
        raise InputError(f"expected 3 coefficients, got {len(fields)}")
    a, b, c = (_parse_int(s) for s in fields)
    if 0 in (a, b, c):
        raise InputError("coefficients must be nonzero")
    return a, b, c


def _parse_scale(text: str) -> Fraction:
    try:
        s = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid rational {text!r}") from None
    if s <= 0:
        raise argparse.ArgumentTypeError("bound scale must be positive")
    return s


def _timed_decide(triple: tuple[int, int, int], witness: bool, scale: Fraction) -> tuple[DecisionReport, float]:
    t0 = time.perf_counter()
    r = decide(*triple, witness=witness, bound_scale=scale)
    return r, (time.perf_counter() - t0) * 1000.0


def _emit(r: DecisionReport, ms: float, args: argparse.Namespace, out) -> None:
    if args.json:
        print(json.dumps(envelope(r, ms), sort_keys=True), file=out)
    else:
        print(format_text(r, args.local_report), file=out)


def run_decide(args: argparse.Namespace, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        triple = _parse_triple(args.coefficients)
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    try:
        r, ms = _timed_decide(triple, args.witness, args.bound_scale)
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=err)
        return EXIT_INCONSISTENT
    _emit(r, ms, args, out)
    return EXIT_SOLVABLE if r.solvable else EXIT_UNSOLVABLE


def read_batch(path: str) -> list[tuple[int, int, int]]:
    """Parse a batch file; raises InputError listing every bad line."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    triples, problems = [], []
    for lineno, raw in enumerate(lines, 1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            triples.append(_parse_triple(text.split()))
        except InputError as exc:
            problems.append(f"line {lineno}: {exc}")
    if problems:
        raise InputError("\n".join(problems))
    return triples


def run_batch(args: argparse.Namespace, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        triples = read_batch(args.path)
    except InputError as exc:
        for line in str(exc).splitlines():
            print(f"error: {line}", file=err)
        return EXIT_USAGE
    n = len(triples)
    try:
        if args.jobs > 1 and n > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                results = list(
                    pool.map(_timed_decide, triples, [args.witness] * n, [args.bound_scale] * n)
                )
        else:
            results = [_timed_decide(t, args.witness, args.bound_scale) for t in triples]
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=err)
        return EXIT_INCONSISTENT
    for r, ms in results:
        _emit(r, ms, args, out)
    return EXIT_SOLVABLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="legendre-ternary",
        description="Decide whether ax^2 + by^2 + cz^2 = 0 has a nonzero rational solution.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON reports")
    common.add_argument(
        "--witness",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="search for an explicit solution when solvable (default: on)",
    )
    common.add_argument("--local-report", action="store_true", help="show per-place detail in text mode")
    common.add_argument(
        "--bound-scale",
        type=_parse_scale,
        default=Fraction(1),
        metavar="Q",
        help="widen (or shrink) the witness search box by this rational factor",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p_dec = sub.add_parser("decide", parents=[common], help="decide a single triple")
    p_dec.add_argument("coefficients", nargs="*", metavar="COEFF", help="a b c")
    p_dec.set_defaults(func=run_decide)
    p_bat = sub.add_parser("batch", parents=[common], help="decide one triple per line of a file")
    p_bat.add_argument("path")
    p_bat.add_argument("--jobs", type=int, default=1, help="worker processes (output order is preserved)")
    p_bat.set_defaults(func=run_batch)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
