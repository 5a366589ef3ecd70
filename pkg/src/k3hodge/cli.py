"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 internal invariant
breach, 64 usage error, 65 bad input data.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import checks, hilb2, hodge, k3, serialize
from .errors import HodgeError, InternalInconsistency
from .golden import MU_PUBLISHED

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INTERNAL = 2
EXIT_USAGE = 64
EXIT_DATA = 65


class UsageError(Exception):
    pass


class BadInput(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"t must be a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="k3hodge", description="Integral (2,2) Hodge classes on the Hilbert square of a K3 surface.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, help_text, formats=True):
        p = sub.add_parser(name, help=help_text, description=help_text)
        if formats:
            p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", type=Path, help="write output here instead of stdout")
        return p

    add("mu-table", "print the 22x22 diagonal coefficient matrix")
    add("generic", "report for the generic K3 surface of degree 2t").add_argument(
        "--t", type=_positive_int, required=True)
    add("analyze", "report for a Picard lattice given as a JSON config").add_argument("config", type=Path)
    pair = add("pair", "intersection pairing of two classes in H^4", formats=False)
    for arg in ("first", "second"):
        pair.add_argument(arg, help=f"one of {sorted(hilb2.NAMED_CLASSES)} or a path to a class JSON file")
    add("verify", "run the self-verification suite", formats=False)
    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def _read_json(path: Path):
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise BadInput(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise BadInput(f"{path} is not valid JSON: {exc}") from None


def _render_report(report: hodge.Hodge22Report, cfg, fmt: str) -> str:
    if fmt == "csv":
        return serialize.matrix_to_csv(report.gram)
    return serialize.dumps(serialize.report_to_json(report, cfg))


def cmd_mu_table(args) -> int:
    mu = k3.diagonal_coefficients()
    n = k3.RANK
    matches = all(mu[i][j] == MU_PUBLISHED.get((i + 1, j + 1), 0) for i in range(n) for j in range(i, n))
    if args.format == "csv":
        text = serialize.matrix_to_csv(mu)
    else:
        text = serialize.dumps(serialize.gram_to_json(mu))
    _emit(text, args.out)
    if not matches:
        print("computed mu table disagrees with the published table", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_generic(args) -> int:
    t = args.t
    cfg = k3.generic_surface(t)
    report = hodge.analyze(cfg)
    _emit(_render_report(report, cfg, args.format), args.out)
    good = report.closed_form_match and report.discriminant == 84 * t ** 3
    return EXIT_OK if good else EXIT_VERIFY_FAILED


def cmd_analyze(args) -> int:
    obj = _read_json(args.config)
    try:
        cfg = serialize.config_from_json(obj)
    except (KeyError, TypeError) as exc:
        raise BadInput(f"malformed config: missing or mistyped field {exc}") from None
    report = hodge.analyze(cfg)
    _emit(_render_report(report, cfg, args.format), args.out)
    return EXIT_OK


def _load_class(spec: str) -> hilb2.H4Class:
    if spec in hilb2.NAMED_CLASSES:
        return hilb2.NAMED_CLASSES[spec]()
    obj = _read_json(Path(spec))
    try:
        return serialize.h4_from_json(obj)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise BadInput(f"malformed class in {spec}: {exc}") from None


def cmd_pair(args) -> int:
    value = hilb2.pair(_load_class(args.first), _load_class(args.second))
    _emit(serialize.dumps({"pairing": serialize.num_str(value)}), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = checks.run_all()
    lines = [r.line() for r in results]
    failed = [r.name for r in results if not r.passed]
    lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
    if failed:
        lines.append("failed: " + "; ".join(failed))
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


COMMANDS = {
    "mu-table": cmd_mu_table,
    "generic": cmd_generic,
    "analyze": cmd_analyze,
    "pair": cmd_pair,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (InternalInconsistency, AssertionError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (HodgeError, ValueError, BadInput) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"cannot write output: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
