"""Command-line surface: parse exact matrices, classify, and report.

All numbers cross the boundary as canonical rational strings ("p/q" with
gcd 1 and positive q, integers without "/1"), never as JSON numbers, so the
output stays exact in any consumer. Identical invocations produce
byte-identical output.

Exit codes: 0 success/PASS, 1 assertion failure (FAIL), 2 input/parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .exact import GaussianRational, Matrix, det
from .family import family_invariants_ok, family_report
from .symplectic import classify_spectrum, is_symplectic, satisfies_cond1, satisfies_cond2

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2

CODE_MALFORMED_JSON = "MalformedJson"
CODE_BAD_SHAPE = "BadShape"
CODE_BAD_ENTRY = "BadEntry"
CODE_ZERO_DENOMINATOR = "ZeroDenominator"

_RATIONAL_RE = re.compile(r"([+-]?\d+)(?:/(\d+))?\Z")

_I4 = Matrix.identity(4)


class MatrixParseError(ValueError):
    """Input rejection with a machine-readable code and a located message."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def rational_to_str(value: Fraction) -> str:
    """Canonical rational literal: "p/q" in lowest terms, or "n" for integers."""
    return str(value)


def parse_rational(text: str, where: str = "value") -> Fraction:
    """Parse a strict rational literal "p/q" or "n" (no decimals, no floats)."""
    match = _RATIONAL_RE.match(text.strip())
    if match is None:
        raise MatrixParseError(CODE_BAD_ENTRY, f"{where}: {text!r} is not a rational literal 'p/q' or 'n'")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise MatrixParseError(CODE_ZERO_DENOMINATOR, f"{where}: {text!r} has denominator zero")
    return Fraction(int(numerator), int(denominator) if denominator is not None else 1)


def parse_matrix(data: bytes | str) -> Matrix:
    """Parse a UTF-8 JSON matrix file {"rows": [[...], ...]} into a 4x4 matrix.

    Each entry must be a string rational literal. Rejections carry a distinct
    code (MalformedJson, BadShape, BadEntry, ZeroDenominator) and a message
    locating the offending row and column.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MatrixParseError(CODE_MALFORMED_JSON, f"not valid UTF-8: {exc}") from exc
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise MatrixParseError(
            CODE_MALFORMED_JSON, f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(obj, dict) or set(obj) != {"rows"}:
        raise MatrixParseError(CODE_BAD_SHAPE, "top level must be an object with a single 'rows' key")
    rows = obj["rows"]
    if not isinstance(rows, list) or len(rows) != 4 or any(
            not isinstance(r, list) or len(r) != 4 for r in rows):
        raise MatrixParseError(CODE_BAD_SHAPE, "'rows' must be a 4x4 array")
    parsed = []
    for i, row in enumerate(rows):
        out = []
        for j, entry in enumerate(row):
            where = f"row {i + 1}, column {j + 1}"
            if not isinstance(entry, str):
                raise MatrixParseError(CODE_BAD_ENTRY, f"{where}: entries must be strings, got {entry!r}")
            out.append(parse_rational(entry, where))
        parsed.append(out)
    return Matrix(parsed)


def serialize_matrix(m: Matrix) -> str:
    """Canonical JSON for a matrix; parse_matrix inverts it bit-exactly."""
    payload = {"rows": [[rational_to_str(e) for e in row] for row in m.rows]}
    return json.dumps(payload, separators=(",", ":"))


def _gaussian_payload(z: GaussianRational) -> dict:
    return {"re": rational_to_str(z.re), "im": rational_to_str(z.im)}


def _classify_payload(m: Matrix) -> dict:
    symplectic = is_symplectic(m)
    return {
        "symplectic": symplectic,
        "trace": rational_to_str(m.trace()),
        "det_minus_I": rational_to_str(det(m - _I4)),
        "cond1": satisfies_cond1(m),
        "cond2": satisfies_cond2(m),
        "spectral_class": classify_spectrum(m).tag.value if symplectic else None,
    }


def _report_payload(report) -> dict:
    return {
        "eps": rational_to_str(report.eps),
        "symplectic": report.symplectic,
        "trace": rational_to_str(report.trace),
        "det_minus_I": rational_to_str(report.det_minus_identity),
        "cond1": report.cond1,
        "cond2": report.cond2,
        "spectral_class": report.spectral_class.tag.value,
        "char_poly_matches_closed_form": report.char_poly_matches_closed_form,
        "eigenvalue_residuals": [_gaussian_payload(z) for z in report.eigenvalue_residuals],
        "splitting_verified": report.splitting_verified,
        "obstruction_value": (None if report.obstruction_value is None
                              else rational_to_str(report.obstruction_value)),
        "distance_to_P0": rational_to_str(report.distance_to_P0),
    }


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, separators=(",", ":")))


def _cmd_classify(path: str) -> int:
    try:
        with open(path, "rb") as handle:
            matrix = parse_matrix(handle.read())
    except OSError as exc:
        print(f"error[Io]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MatrixParseError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _print_json(_classify_payload(matrix))
    return EXIT_OK


def _parse_eps(text: str) -> Fraction:
    eps = parse_rational(text, "eps")
    if eps < 0:
        raise MatrixParseError(CODE_BAD_ENTRY, f"eps: {text!r} must be >= 0")
    return eps


def _cmd_family(eps_text: str) -> int:
    try:
        eps = _parse_eps(eps_text)
    except MatrixParseError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _print_json(_report_payload(family_report(eps)))
    return EXIT_OK


def _cmd_sweep(eps_list_text: str) -> int:
    try:
        eps_values = [_parse_eps(piece) for piece in eps_list_text.split(",")]
    except MatrixParseError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print("eps,trace,det_minus_I,cond2,class,dist_to_P0")
    for eps in eps_values:
        report = family_report(eps)
        print(",".join([
            rational_to_str(report.eps),
            rational_to_str(report.trace),
            rational_to_str(report.det_minus_identity),
            "true" if report.cond2 else "false",
            report.spectral_class.tag.value,
            rational_to_str(report.distance_to_P0),
        ]))
    return EXIT_OK


def _cmd_verify_counterexample(depth: int) -> int:
    if depth < 1:
        print("error[BadEntry]: depth must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    all_ok = True
    limit = family_report(Fraction(0))
    limit_ok = family_invariants_ok(limit)
    all_ok &= limit_ok
    print(f"eps=0 cond1={str(limit.cond1).lower()} cond2={str(limit.cond2).lower()} "
          f"obstruction={rational_to_str(limit.obstruction_value)} "
          f"{'ok' if limit_ok else 'FAIL'}")
    for k in range(1, depth + 1):
        eps = Fraction(1, 2 ** k)
        report = family_report(eps)
        ok = family_invariants_ok(report) and report.distance_to_P0 == eps
        all_ok &= ok
        print(f"eps={rational_to_str(eps)} cond2={str(report.cond2).lower()} "
              f"class={report.spectral_class.tag.value} "
              f"dist={rational_to_str(report.distance_to_P0)} "
              f"{'ok' if ok else 'FAIL'}")
    print("PASS" if all_ok else "FAIL")
    return EXIT_OK if all_ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symplectic4",
        description="Exact analysis of 4x4 symplectic matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser(
        "classify", help="classify a matrix read from a JSON file")
    p_classify.add_argument("--matrix", required=True, metavar="PATH",
                            help="path to a {\"rows\": [[...]]} JSON matrix file")

    p_family = sub.add_parser(
        "family", help="full verification report for one family member")
    p_family.add_argument("--eps", required=True, metavar="P/Q",
                          help="rational parameter >= 0, e.g. 1, 1/2")

    p_sweep = sub.add_parser(
        "sweep", help="CSV report over a list of eps values")
    p_sweep.add_argument("--eps", required=True, metavar="LIST",
                         help="comma-separated rational literals, e.g. 1,1/2,1/4")

    p_verify = sub.add_parser(
        "verify-counterexample",
        help="assert the family invariants along eps = 1/2^k and print PASS/FAIL")
    p_verify.add_argument("--depth", required=True, type=int, metavar="K",
                          help="verify eps = 1/2^k for k = 1..K")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "classify":
        return _cmd_classify(args.matrix)
    if args.command == "family":
        return _cmd_family(args.eps)
    if args.command == "sweep":
        return _cmd_sweep(args.eps)
    return _cmd_verify_counterexample(args.depth)


if __name__ == "__main__":
    sys.exit(main())
