"""Command-line interface: ``qmobius series|table|verify``.

Exit codes: 0 success, 1 a verification failed, 2 usage error,
3 the enumeration oracle limit was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import identities, partitions
from .errors import OracleLimitExceeded
from .fps import format_coeff, prod_pow

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


def _series_builders():
    p = partitions
    return {
        "psiQ": (False, lambda a, n: p.series_psi_q(n)),
        "FQ": (False, lambda a, n: p.series_fq(n)),
        "FQhat": (False, lambda a, n: p.series_fq_hat(n)),
        "P": (False, lambda a, n: p.series_p(n)),
        "Pa": (True, p.series_pa),
        "PaHat": (True, p.series_pa_hat),
        "Ba": (True, p.series_b),
        "BaHat": (True, p.series_b_hat),
        "pentagonal": (False, lambda a, n: prod_pow(lambda k: 1, n)),
        "jacobi": (False, lambda a, n: prod_pow(lambda k: 3, n)),
    }


SERIES = _series_builders()

TABLES = {
    "p": (False, lambda a, n: partitions.count_partitions(n)),
    "pa": (True, partitions.count_by_parts),
    "paHat": (True, partitions.count_by_parts_hat),
    "Q": (False, lambda a, n: partitions.count_distinct(n)),
    "Qhat": (False, lambda a, n: partitions.count_uniform_multiplicity(n)),
    "ba": (True, partitions.count_durfee),
    "baHat": (True, partitions.count_durfee_hat),
    "durfeeProfile": (False, lambda a, n: partitions.durfee_distribution(n)),
}
ENUMERATION_ONLY = {"ba", "baHat", "durfeeProfile"}


class UsageError(Exception):
    pass


def _exact(x) -> str:
    return format_coeff(Fraction(x))


def dumps(record: dict) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(record, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def parse_a_range(text: str) -> list[int]:
    """``3``, ``1..5`` or ``1,3,5``."""
    out: list[int] = []
    try:
        for piece in text.split(","):
            piece = piece.strip()
            if ".." in piece:
                lo, hi = piece.split("..", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(piece))
    except ValueError:
        raise UsageError(f"bad --a value {text!r}") from None
    if not out or min(out) < 1:
        raise UsageError(f"--a needs positive integers, got {text!r}")
    return out


def parse_corruption(specs: list[str]) -> dict[str, dict[int, int]]:
    """``TABLE:INDEX[:DELTA]`` entries, e.g. ``Q:5`` or ``pa@2:9:-1``."""
    out: dict[str, dict[int, int]] = {}
    for entry in specs:
        bits = entry.split(":")
        if len(bits) not in (2, 3):
            raise UsageError(f"bad --corrupt value {entry!r}; expected TABLE:INDEX[:DELTA]")
        try:
            idx = int(bits[1])
            delta = int(bits[2]) if len(bits) == 3 else 1
        except ValueError:
            raise UsageError(f"bad --corrupt value {entry!r}") from None
        slot = out.setdefault(bits[0], {})
        slot[idx] = slot.get(idx, 0) + delta
    try:
        return identities.normalize_corruption(out)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def report_to_dict(r: identities.VerificationReport, timings: bool = False) -> dict:
    def mismatch(m):
        return {"power": m.power, "lhs": _exact(m.lhs), "rhs": _exact(m.rhs), "claim": m.claim}

    d = {
        "name": r.name,
        "params": r.params,
        "order": r.order,
        "status": r.status,
        "claims": list(r.claims),
        "first_mismatch": mismatch(r.first_mismatch) if r.first_mismatch else None,
        "notes": list(r.notes),
    }
    if r.error:
        d["error"] = r.error
    if r.diffs:
        d["diffs"] = [mismatch(m) for m in r.diffs]
    if timings:
        d["elapsed"] = round(r.elapsed, 6)
    return d


def _report_text(r, timings):
    line = f"{'PASS' if r.passed else 'FAIL'} {r.label} order={r.order}"
    m = r.first_mismatch
    if m:
        line += f" first mismatch at q^{m.power} ({m.claim}): lhs={_exact(m.lhs)} rhs={_exact(m.rhs)}"
    if r.error:
        line += f" error: {r.error}"
    if timings:
        line += f" [{r.elapsed:.3f}s]"
    lines = [line]
    lines += [f"  q^{d.power} ({d.claim}): lhs={_exact(d.lhs)} rhs={_exact(d.rhs)}" for d in r.diffs]
    return "\n".join(lines)


def cmd_series(args) -> tuple[str, int]:
    needs_a, build = SERIES[args.name]
    if needs_a and args.a is None:
        raise UsageError(f"series {args.name} needs --a")
    if not needs_a and args.a is not None:
        raise UsageError(f"series {args.name} takes no --a")
    s = build(args.a, args.order)
    coeffs = [_exact(c) for c in s.coeffs]
    if args.format == "json":
        params = {"a": args.a} if needs_a else {}
        return dumps({"kind": "series", "name": args.name, "order": args.order,
                      "params": params, "coefficients": coeffs}), EXIT_OK
    return ", ".join(coeffs) + "\n", EXIT_OK


def cmd_table(args) -> tuple[str, int]:
    needs_a, count = TABLES[args.stat]
    if needs_a and args.a is None:
        raise UsageError(f"table {args.stat} needs --a")
    if not needs_a and args.a is not None:
        raise UsageError(f"table {args.stat} takes no --a")
    if args.stat in ENUMERATION_ONLY and args.n_max > partitions.oracle_limit():
        raise OracleLimitExceeded(args.n_max, partitions.oracle_limit())
    rows =[(n, count(args.a, n)) for n in range(1, args.n_max + 1)]
    if args.stat == "durfeeProfile":
        if args.format == "json":
            values = [{"n": n, "profiles": [{"square": s, "height": m, "count": str(c)}
                                            for (s, m), c in dist.items()]}
                      for n, dist in rows]
        else:
            text = "".join(
                f"{n}\t" + " ".join(f"({s},{m})={c}" for (s, m), c in dist.items()) + "\n"
                for n, dist in rows)
    elif args.format == "json":
        values = [{"n": n, "value": _exact(v)} for n, v in rows]
    else:
        text = "".join(f"{n}\t{_exact(v)}\n" for n, v in rows)
    if args.format == "json":
        params = {"a": args.a} if needs_a else {}
        return dumps({"kind": "table", "stat": args.stat, "n_max": args.n_max,
                      "params": params, "values": values}), EXIT_OK
    return text, EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    if args.identity != "all" and args.identity not in identities.REGISTRY:
        raise UsageError(f"unknown identity {args.identity!r}; choose from "
                         f"{', '.join(identities.REGISTRY)} or all")
    a_values = parse_a_range(args.a) if args.a else list(range(1, 6))
    corrupt = parse_corruption(args.corrupt or [])
    sequences = args.sequence or list(identities.LEMMA1_SEQUENCES)
    for seq in sequences:
        if seq not in identities.LEMMA1_SEQUENCES:
            raise UsageError(f"unknown sequence {seq!r}")
    names = None if args.identity == "all" else [args.identity]
    reports = identities.run_all(args.order, a_values=a_values, sequences=sequences, names=names,
                                 corrupt=corrupt, crosscheck=args.crosscheck,
                                 full_diff=args.full_diff)
    ok = all(r.passed for r in reports)
    code = EXIT_OK if ok else EXIT_FAIL
    if args.format == "json":
        return dumps({"kind": "report", "all_passed": ok,
                      "reports": [report_to_dict(r, args.timings) for r in reports]}), code
    return "".join(_report_text(r, args.timings) + "\n" for r in reports), code


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _nonnegative(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--oracle-limit", type=_nonnegative, default=None,
                        help=f"largest n for brute-force enumeration (default "
                             f"${partitions.ORACLE_LIMIT_ENV} or {partitions.DEFAULT_ORACLE_LIMIT})")

    parser = argparse.ArgumentParser(prog="qmobius", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("series", parents=[common], help="print coefficients 0..N of a generating function")
    ps.add_argument("name", choices=list(SERIES))
    ps.add_argument("--a", type=_positive)
    ps.add_argument("--order", "-N", type=_nonnegative, default=10)
    ps.set_defaults(func=cmd_series)

    pt = sub.add_parser("table", parents=[common], help="tabulate a partition statistic for n = 1..n-max")
    pt.add_argument("stat", choices=list(TABLES))
    pt.add_argument("--a", type=_positive)
    pt.add_argument("--n-max", type=_positive, default=10)
    pt.set_defaults(func=cmd_table)

    pv = sub.add_parser("verify", parents=[common], help="check identities coefficientwise")
    pv.add_argument("identity", help=f"one of {', '.join(identities.REGISTRY)}, or all")
    pv.add_argument("--a", help="parameter range for theorem2/theorem3: 3, 1..5 or 1,3,5 (default 1..5)")
    pv.add_argument("--order", "-N", type=_positive, default=100)
    pv.add_argument("--sequence", action="append",
                    help=f"lemma1 exponent sequence ({', '.join(identities.LEMMA1_SEQUENCES)}); repeatable")
    pv.add_argument("--crosscheck", type=_nonnegative, default=None,
                    help=f"enumeration cross-check order (default {identities.DEFAULT_CROSSCHECK_ORDER})")
    pv.add_argument("--corrupt", action="append", metavar="TABLE:INDEX[:DELTA]",
                    help="perturb an input table entry (fault injection); repeatable")
    pv.add_argument("--full-diff", action="store_true", help="list every mismatching power")
    pv.add_argument("--timings", action="store_true", help="include elapsed times (output no longer byte-stable)")
    pv.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    previous = partitions._limit_override
    if args.oracle_limit is not None:
        partitions.set_oracle_limit(args.oracle_limit)
    try:
        out, code = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"qmobius: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OracleLimitExceeded as exc:
        print(f"qmobius: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    finally:
        partitions.set_oracle_limit(previous)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
