"""Command-line surface: compute, patterns, verify, bench.

Exit codes: 0 success (all identities pass), 1 verification failure,
2 usage or validation error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Sequence

from . import formulas, oracle, verify
from .patterns import enumerate_patterns, is_strictly_decreasing, is_weakly_decreasing
from .polyring import Polynomial

MODES = ("oracle", "closed", "recursive", "tokuyama", "stanley")


def _parts(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a comma-separated list of integers, got {text!r}"
        ) from None
    if any(p < 0 for p in parts):
        raise argparse.ArgumentTypeError(f"parts must be nonnegative: {text!r}")
    return parts


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a comma-separated list of integers, got {text!r}"
        ) from None


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def cmd_compute(args: argparse.Namespace) -> int:
    lam = args.lam
    if args.mode == "stanley":
        if not is_strictly_decreasing(lam):
            return _usage_error(
                f"mode 'stanley' requires a strictly decreasing partition, got {lam}"
            )
    elif not is_weakly_decreasing(lam):
        return _usage_error(
            f"mode {args.mode!r} requires a weakly decreasing partition, got {lam}"
        )
    evaluator = {
        "oracle": oracle.hall_littlewood,
        "closed": formulas.hl_pattern_expansion,
        "recursive": formulas.hl_row_recursion,
        "tokuyama": formulas.tokuyama_sum,
        "stanley": formulas.stanley_sum,
    }[args.mode]
    poly = evaluator(lam)
    _emit(poly.to_json() if args.format == "json" else str(poly), args.out)
    return 0


def _pattern_record(pattern, with_stats: bool) -> dict:
    left, right, special = pattern.leaning_counts()
    record = {
        "rows": [list(r) for r in pattern.rows],
        "m": list(pattern.weight()),
        "left": left,
        "right": right,
        "special": special,
    }
    if with_stats:
        weights = formulas.pattern_row_weights(pattern)
        coeff = Polynomial.one(0)
        for w in weights:
            coeff = coeff * w
        record["row_weights"] = [w.to_dict() for w in weights]
        record["coefficient"] = coeff.to_dict()
    return record


def cmd_patterns(args: argparse.Namespace) -> int:
    top = args.top
    if args.stats and not args.strict:
        return _usage_error("--stats requires --strict (row weights need strict rows)")
    if args.strict:
        if not is_strictly_decreasing(top):
            return _usage_error(f"--strict requires a strictly decreasing top row, got {top}")
    elif not is_weakly_decreasing(top):
        return _usage_error(f"top row must be weakly decreasing, got {top}")
    found = enumerate_patterns(top, strict=args.strict)
    if args.format == "json":
        records = [_pattern_record(p, args.stats) for p in found]
        _emit(json.dumps(records), args.out)
        return 0
    lines: list[str] = [f"{len(found)} pattern(s) with top row {top}"]
    for idx, pattern in enumerate(found, start=1):
        left, right, special = pattern.leaning_counts()
        lines.append(f"pattern {idx}:")
        lines.extend("  " + ln for ln in pattern.triangle_lines())
        lines.append(f"  m = {pattern.weight()}")
        lines.append(f"  leaning: left={left} right={right} special={special}")
        if args.stats:
            weights = formulas.pattern_row_weights(pattern)
            coeff = Polynomial.one(0)
            for i, w in enumerate(weights, start=1):
                coeff = coeff * w
                lines.append(f"  row {i} weight: {w}")
            lines.append(f"  coefficient: {coeff}")
    _emit("\n".join(lines), args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.n_max < 1:
        return _usage_error("--n must be at least 1")
    if args.n_max > oracle.max_oracle_vars():
        return _usage_error(
            f"--n {args.n_max} exceeds the oracle cap ({oracle.max_oracle_vars()})"
        )
    report = verify.run_suite(args.suite, args.n_max, args.part_max)
    if args.format == "json":
        _emit(json.dumps(report.to_dict()), args.out)
    else:
        lines = []
        for case in report.cases:
            status = "ok" if case.ok else "FAIL"
            lines.append(f"{status:4s} lambda={case.lam} {case.identity}")
        lines.append(
            f"suite={report.suite} total={report.total} passed={report.passed} "
            f"failed={report.failed} wall={report.wall_time:.3f}s"
        )
        _emit("\n".join(lines), args.out)
    return 0 if report.failed == 0 else 1


def _timed(fn, repeats: int) -> tuple[float, Polynomial]:
    best = None
    value = None
    for _ in range(repeats):
        start = time.perf_counter()
        value = fn()
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, value


def cmd_bench(args: argparse.Namespace) -> int:
    cap = oracle.max_oracle_vars()
    if any(n < 1 for n in args.n_list):
        return _usage_error("--n sizes must be at least 1")
    if any(n > cap for n in args.n_list):
        return _usage_error(f"--n sizes exceed the oracle cap ({cap})")
    if args.repeats < 1:
        return _usage_error("--repeats must be at least 1")
    rows: list[dict] = []
    for n in args.n_list:
        for lam in verify.weakly_decreasing_tuples(n, args.part_max):
            seconds, poly = _timed(
                lambda lam=lam, n=n: oracle.weyl_denominator(n, "q")
                * oracle.hall_littlewood(lam),
                args.repeats,
            )
            rows.append({"n": n, "lambda": lam, "mode": "oracle",
                         "terms": len(poly), "seconds": seconds})

            def closed(lam=lam):
                # Clear memoized determinants so repeats measure real work.
                formulas.clear_caches()
                return formulas.hl_pattern_expansion(lam)

            seconds, poly = _timed(closed, args.repeats)
            rows.append({"n": n, "lambda": lam, "mode": "closed",
                         "terms": len(poly), "seconds": seconds})
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(["n", "lambda", "mode", "terms", "seconds"])
    for row in rows:
        writer.writerow([
            row["n"],
            "-".join(str(p) for p in row["lambda"]),
            row["mode"],
            row["terms"],
            f"{row['seconds']:.9f}",
        ])
    table = ["n    lambda        mode     terms  seconds"]
    for row in rows:
        lam_text = ",".join(str(p) for p in row["lambda"])
        table.append(
            f"{row['n']:<4d} {lam_text:<13s} {row['mode']:<8s} "
            f"{row['terms']:<6d} {row['seconds']:.6f}"
        )
    print("\n".join(table))
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(buffer.getvalue())
    else:
        print(buffer.getvalue().rstrip("\n"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hlgt",
        description="Exact Hall-Littlewood polynomials from GT-pattern statistics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="evaluate one polynomial")
    p_compute.add_argument("--lambda", dest="lam", type=_parts, required=True,
                           help="partition as comma-separated parts, e.g. 2,1,0")
    p_compute.add_argument("--mode", choices=MODES, required=True)
    p_compute.add_argument("--format", choices=("text", "json"), default="text")
    p_compute.add_argument("--out", default=None, help="write output to a file")
    p_compute.set_defaults(func=cmd_compute)

    p_patterns = sub.add_parser("patterns", help="list GT patterns for a top row")
    p_patterns.add_argument("--top", type=_parts, required=True)
    p_patterns.add_argument("--strict", action="store_true",
                            help="only patterns with strictly decreasing rows")
    p_patterns.add_argument("--stats", action="store_true",
                            help="include per-row weight sums (needs --strict)")
    p_patterns.add_argument("--format", choices=("text", "json"), default="text")
    p_patterns.add_argument("--out", default=None)
    p_patterns.set_defaults(func=cmd_patterns)

    p_verify = sub.add_parser("verify", help="check identities over a grid")
    p_verify.add_argument("--n", dest="n_max", type=int, required=True,
                          help="maximum partition length")
    p_verify.add_argument("--max-part", dest="part_max", type=int, default=2)
    p_verify.add_argument("--suite", choices=verify.SUITE_NAMES, default="all")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="time oracle vs pattern evaluation")
    p_bench.add_argument("--n", dest="n_list", type=_int_list, required=True,
                         help="comma-separated list of lengths, e.g. 3,4")
    p_bench.add_argument("--max-part", dest="part_max", type=int, default=2)
    p_bench.add_argument("--repeats", type=int, default=3)
    p_bench.add_argument("--out", default=None, help="write the CSV to a file")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
