"""Command line: ``smzv eval``, ``smzv verify`` and ``smzv series``.

Exit codes: 0 pass, 2 usage or unknown target, 3 precision unreachable,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import mpmath

from . import numeric
from .core import parse_index, to_json
from .errors import PrecisionUnreachable, SmzvError, UnknownId
from .genseries import DEFAULT_ORDER
from .tadic import Flavor, t_adic_smzv
from . import verify

SCHEMA = "smzv-report/1"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECISION = 3
EXIT_FAIL = 4


class UsageError(Exception):
    pass


def _emit(report: dict, fmt: str, text_lines) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=False))
    else:
        for line in text_lines:
            print(line)


def _tol(args):
    if args.tol is None:
        return None
    try:
        tol = mpmath.mpf(args.tol)
    except (ValueError, TypeError):
        raise UsageError(f"bad --tol {args.tol!r}") from None
    if tol <= 0:
        raise UsageError("--tol must be positive")
    return tol


def cmd_eval(args) -> int:
    try:
        k = parse_index(args.index)
    except SmzvError as exc:
        raise UsageError(str(exc)) from None
    if args.m < 1:
        raise UsageError("--m must be at least 1")
    flavor = Flavor.parse(args.flavor)
    series = t_adic_smzv(k, args.m, flavor)
    report = {"schema": SCHEMA, "command": "eval", "index": list(k), "truncation": args.m,
              "flavor": flavor.value, "series": to_json(series)}
    lines = [f"zeta_S^{flavor.value}({','.join(map(str, k))}) mod t^{args.m}:"]
    values = numeric.eval_series(series, args.prec) if args.numeric else None
    if values is not None:
        report["precision"] = args.prec
        report["numeric"] = [mpmath.nstr(v, args.prec) for v in values]
    for m, c in enumerate(series.coeffs):
        line = f"  t^{m}: {c!r}"
        if values is not None:
            line += f"  ~ {mpmath.nstr(values[m], args.prec)}"
        lines.append(line)
    _emit(report, args.format, lines)
    return EXIT_OK


def _check_line(c: dict) -> str:
    tag = "INFO" if c["kind"] == "informational" else c["verdict"].upper()
    extra = f", max|diff|={c['max_absdiff']}" if "max_absdiff" in c else ""
    line = f"{tag:4}  {c['name']}  ({c['kind']}, cases={c['cases']}{extra})"
    for f in c["failures"]:
        line += f"\n        {f.get('case')}: {f.get('absdiff', '')} lhs={f.get('lhs')} rhs={f.get('rhs')}"
    return line


def _run_checks(command: str, target: str, name, args) -> int:
    tol = _tol(args)
    try:
        checks = verify.run(target, name, p=args.prec, tol=tol, seed=args.seed,
                            max_n=args.max_n, order=args.order)
    except UnknownId as exc:
        raise UsageError(exc.args[0] if exc.args else str(exc)) from None
    verdict = verify.verdict(checks)
    report = {"schema": SCHEMA, "command": command, "target": target, "name": name,
              "precision": args.prec, "seed": args.seed,
              "tol": mpmath.nstr(tol if tol is not None else verify.default_tol(args.prec), 3),
              "checks": checks, "verdict": verdict}
    lines = [f"# {command} {target}{' ' + name if name else ''}  precision={args.prec} seed={args.seed}"]
    lines += [_check_line(c) for c in checks]
    lines.append(f"verdict: {verdict}")
    _emit(report, args.format, lines)
    return EXIT_OK if verdict == "pass" else EXIT_FAIL


def cmd_verify(args) -> int:
    return _run_checks("verify", args.target, args.name, args)


def cmd_series(args) -> int:
    return _run_checks("series", "series", args.lemma, args)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec", type=int, default=verify.DEFAULT_PREC, help="decimal digits")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cache", default=None,
                        help="JSONL file of MZV values (SMZV_CACHE takes precedence)")

    checks = argparse.ArgumentParser(add_help=False)
    checks.add_argument("--tol", default=None, help="absolute tolerance, default 10^-(prec-20)")
    checks.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    checks.add_argument("--max-n", type=int, default=None, dest="max_n")
    checks.add_argument("--order", type=int, default=DEFAULT_ORDER)

    parser = argparse.ArgumentParser(prog="smzv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="t-adic symmetric MZV of an index")
    p.add_argument("--index", required=True, help='comma separated, e.g. "3,1,3"; "" is empty')
    p.add_argument("--m", type=int, default=1, help="truncation order (mod t^m)")
    p.add_argument("--flavor", choices=("sh", "star"), default="sh")
    p.add_argument("--numeric", action="store_true", help="also evaluate the coefficients")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", parents=[common, checks], help="run verification targets")
    p.add_argument("target", help=", ".join(verify.targets()))
    p.add_argument("name", nargs="?", default=None, help="member of the target, e.g. main1 or wordA")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", parents=[common, checks], help="check one generating-series lemma")
    p.add_argument("lemma", help="lemma id, or 'all', or 'preamble'")
    p.set_defaults(func=cmd_series)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    path = os.environ.get("SMZV_CACHE") or args.cache
    if path:
        numeric.set_cache_path(path)
    try:
        if args.prec < 1:
            raise UsageError("--prec must be positive")
        return args.func(args)
    except UsageError as exc:
        print(f"smzv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PrecisionUnreachable as exc:
        print(f"smzv: precision: {exc}", file=sys.stderr)
        return EXIT_PRECISION


if __name__ == "__main__":
    sys.exit(main())
