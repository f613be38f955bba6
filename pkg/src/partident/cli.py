"""Command-line interface.

Exit codes: 0 success, 1 an identity or agreement check failed,
2 usage error, 3 internal invariant breach (two evaluators disagree).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import checks, counting, identities, oracle, solutions
from .partset import PartSetError, parse_partset
from .series import SeriesZ
from .statistic import SIGNED, UNRESTRICTED, bounded, even_parts, odd_parts, signed_bounded

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

STATS = {
    "p": lambda a: UNRESTRICTED,
    "p_alpha": bounded,
    "pbar": lambda a: SIGNED,
    "pbar_alpha": signed_bounded,
    "even": even_parts,
    "odd": odd_parts,
}


class UsageError(Exception):
    pass


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partident",
        description="Partition counts over arbitrary part sets and checks of part-set-independent identities.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    common.add_argument("--output", "-o", default=None, help="write to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="table of one partition statistic")
    p.add_argument("--set", required=True, dest="partset")
    p.add_argument("--stat", required=True, choices=sorted(STATS))
    p.add_argument("--alpha", type=_positive)
    p.add_argument("--max-n", type=_nonneg, required=True)

    p = sub.add_parser("solutions", parents=[common], help="solution matrix of n = sum base^i N_i")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--base", type=int, default=2)
    p.add_argument("--cap", type=_nonneg, default=solutions.DEFAULT_ENUM_CAP)

    p = sub.add_parser("gamma", parents=[common], help="Gamma_alpha table")
    p.add_argument("--set", required=True, dest="partset")
    p.add_argument("--alpha", type=_positive, required=True)
    p.add_argument("--max-n", type=_nonneg, required=True)

    p = sub.add_parser("verify", parents=[common], help="verify one identity for n = 0..max-n")
    p.add_argument(
        "--identity",
        required=True,
        choices=("forward", "forward-binary", "inverse", "signed-binary", "signed-general"),
    )
    p.add_argument("--set", required=True, dest="partset")
    p.add_argument("--alpha", type=_positive, default=1)
    p.add_argument("--max-n", type=_nonneg, required=True)
    p.add_argument("--mode", choices=identities.MODES, default="both")
    p.add_argument("--cap", type=_nonneg, default=solutions.DEFAULT_ENUM_CAP, help="enumerative evaluator cap")
    p.add_argument("--allow-odd-alpha", action="store_true")

    p = sub.add_parser("series-check", parents=[common], help="telescoping-product series identities")
    p.add_argument("--set", required=True, dest="partset")
    p.add_argument("--alpha", type=_positive, required=True)
    p.add_argument("--order", type=_nonneg, default=128)

    p = sub.add_parser("oracle-check", parents=[common], help="brute force vs DP vs series")
    p.add_argument("--cap", type=_nonneg, default=oracle.DEFAULT_CAP)
    return parser


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _table_text(fmt, header, rows, meta) -> str:
    if fmt == "json":
        return json.dumps(meta, indent=2) + "\n"
    if fmt == "csv":
        return _csv([header, *rows])
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    lines = ["  ".join(str(x).rjust(w) for x, w in zip(r, widths)) for r in [header, *rows]]
    return "\n".join(lines) + "\n"


def cmd_count(args):
    ps = parse_partset(args.partset)
    if args.stat in ("p_alpha", "pbar_alpha") and args.alpha is None:
        raise UsageError(f"--stat {args.stat} needs --alpha")
    if args.stat in ("p", "pbar") and args.alpha is not None:
        raise UsageError(f"--stat {args.stat} takes no --alpha")
    stat = STATS[args.stat](args.alpha)
    table = counting.count(stat, ps, args.max_n)
    meta = {
        "statistic": str(stat),
        "set": ps.label,
        "max_n": table.max_n,
        "values": [str(v) for v in table.values],
    }
    rows = list(enumerate(table.values))
    return _table_text(args.format, ["n", str(stat)], rows, meta), EXIT_OK


def cmd_solutions(args):
    if args.base < 2:
        raise UsageError("--base must be >= 2")
    if args.n > args.cap:
        raise UsageError(f"n={args.n} exceeds enumeration cap {args.cap} (raise --cap)")
    m = solutions.enumerate_solutions(args.n, args.base)
    if args.format == "json":
        text = json.dumps({"n": m.n, "base": m.base, "rows": [list(r) for r in m.rows]}) + "\n"
    else:
        text = "".join(",".join(map(str, r or (0,))) + "\n" for r in m.rows)
    return text, EXIT_OK


def cmd_gamma(args):
    ps = parse_partset(args.partset)
    signed = counting.count(SIGNED, ps, args.max_n)
    table = identities.gamma_table(args.alpha, signed, args.max_n)
    via_series = identities.gamma_series(args.alpha, SeriesZ(signed.values))
    code = EXIT_OK if tuple(via_series) == table.values else EXIT_INTERNAL
    if code:
        print("internal error: Gamma by solution matrices and by series disagree", file=sys.stderr)
    meta = {
        "alpha": args.alpha,
        "set": ps.label,
        "max_n": args.max_n,
        "values": [str(v) for v in table.values],
    }
    rows = list(enumerate(table.values))
    return _table_text(args.format, ["n", "gamma"], rows, meta), code


def cmd_verify(args):
    ps = parse_partset(args.partset)
    report = identities.verify(
        args.identity, ps, args.alpha, args.max_n, args.mode, args.cap, args.allow_odd_alpha
    )
    if report.exploration:
        code = EXIT_OK
    elif not report.paths_agree:
        code = EXIT_INTERNAL
    else:
        code = EXIT_OK if report.all_equal else EXIT_FAIL

    if args.format == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n", code
    rows = [(r.n, r.lhs, r.rhs, str(r.equal).lower()) for r in report.records]
    if args.format == "csv":
        return _csv([("n", "lhs", "rhs", "equal"), *rows]), code
    head = f"# {report.identity} set={report.set_label} alpha={report.alpha} N={report.N} mode={report.mode}"
    if report.exploration:
        head += " (expected-failure exploration)"
    body = _table_text("plain", ["n", "lhs", "rhs", "equal"], rows, None)
    tail = f"all_equal: {str(report.all_equal).lower()}\n"
    bad = report.first_failure()
    if bad is not None:
        tail += f"first inequality at n={bad.n}: lhs={bad.lhs} rhs={bad.rhs}\n"
    return head + "\n" + body + tail, code


def _checks_text(fmt, results):
    if fmt == "json":
        return json.dumps([{"check": c.name, "ok": c.ok, "detail": c.detail} for c in results], indent=2) + "\n"
    if fmt == "csv":
        return _csv([("check", "ok", "detail"), *((c.name, str(c.ok).lower(), c.detail) for c in results)])
    lines = [("PASS " if c.ok else "FAIL ") + c.name + (f": {c.detail}" if c.detail else "") for c in results]
    return "\n".join(lines) + "\n"


def cmd_series_check(args):
    ps = parse_partset(args.partset)
    results = checks.series_check(ps, args.alpha, args.order)
    return _checks_text(args.format, results), EXIT_OK if all(c.ok for c in results) else EXIT_FAIL


def cmd_oracle_check(args):
    results = checks.oracle_check(args.cap)
    return _checks_text(args.format, results), EXIT_OK if all(c.ok for c in results) else EXIT_FAIL


COMMANDS = {
    "count": cmd_count,
    "solutions": cmd_solutions,
    "gamma": cmd_gamma,
    "verify": cmd_verify,
    "series-check": cmd_series_check,
    "oracle-check": cmd_oracle_check,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        text, code = COMMANDS[args.command](args)
    except (UsageError, PartSetError, identities.IdentityError) as exc:
        print(f"partident {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
