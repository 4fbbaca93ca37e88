"""Command-line interface.

Exit status: 0 success, 1 a verification failed, 2 usage or domain error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import logging
import sys
import warnings
from typing import Sequence

from .euclid import DomainError, fib, fibonacci_pair, trace
from .golden import ApproximationWarning, GoldenInt, golden_to_float
from .harness import emit_csv, render_csv, scan, tightness_fibonacci
from .potential import analyze

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3

log = logging.getLogger("euclid_potential")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _natural(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a non-negative integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text}")
    return value


def _positive(text: str) -> int:
    value = _natural(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text}")
    return value


def _verdict(ok: bool) -> str:
    return "pass" if ok else "FAIL"


def _golden_cell(g: GoldenInt) -> str:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ApproximationWarning)
        approx = golden_to_float(g)
    mark = "≈~" if caught else "≈"
    return f"{g} ({mark}{approx:.6f})"


def _note_swap(swapped: bool, x: int, y: int) -> None:
    if swapped:
        print(f"note: operands swapped to x={x} y={y}", file=sys.stderr)


def cmd_gcd(args: argparse.Namespace) -> int:
    t = trace(args.x, args.y)
    _note_swap(t.swapped, t.x, t.y)
    print(f"gcd={t.gcd_value} iterations={t.m}")
    return EXIT_OK


def cmd_trace(args: argparse.Namespace) -> int:
    t = trace(args.x, args.y)
    _note_swap(t.swapped, t.x, t.y)
    rows = [("i", "x", "y", "q", "r", "s_add", "s_golden")]
    for i, st in enumerate(t.steps, start=1):
        rows.append(
            (
                str(i),
                str(st.x),
                str(st.y),
                "-" if st.q is None else str(st.q),
                "-" if st.r is None else str(st.r),
                str(st.x + st.y),
                _golden_cell(GoldenInt(st.x - st.y, st.y)),
            )
        )
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    for r in rows:
        cells = [cell.rjust(w) for cell, w in zip(r[:-1], widths)] + [r[-1]]
        print("  ".join(cells))
    print(f"gcd={t.gcd_value} iterations={t.m}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    rep = analyze(args.x, args.y)
    _note_swap((rep.x, rep.y) != (args.x, args.y), rep.x, rep.y)
    eq = ",".join(str(i) for i in sorted(rep.lemma2_equality_steps)) or "none"
    lame = _verdict(rep.lame_holds) if rep.lame.applicable else "n/a"
    print(f"x={rep.x} y={rep.y}")
    print(
        f"thm1={_verdict(rep.thm1_exact_holds)} thm2={_verdict(rep.thm2_exact_holds)} "
        f"lemma1={_verdict(all(rep.lemma1_per_step))} lemma2={_verdict(all(rep.lemma2_per_step))} "
        f"lemma2_equality_steps={eq} cor1={_verdict(rep.cor1_holds)} "
        f"cor2={_verdict(rep.cor2_holds)} lame={lame}"
    )
    print(
        f"m={rep.m} thm1_bound≈{rep.thm1_float_bound:.6f} "
        f"thm2_bound≈{rep.thm2_float_bound:.6f} all_checks={_verdict(rep.all_pass)}"
    )
    return EXIT_OK if rep.all_pass else EXIT_FAIL


def cmd_scan(args: argparse.Namespace) -> int:
    summary = scan(args.max, partitions=args.partitions, workers=args.workers)
    wx, wy = summary.max_m_witness
    print(
        f"x_max={summary.x_max} pairs={summary.pairs_checked} max_m={summary.max_m} "
        f"witness=({wx},{wy}) violations={summary.violations}"
    )
    print(" ".join(f"{c}={n}" for c, n in summary.violations_by_check.items()))
    for check, pairs in summary.violation_examples.items():
        log.warning("%s violated at %s", check, pairs)
    if args.csv:
        emit_csv(summary, args.csv)
        log.info("wrote %s", args.csv)
    return EXIT_OK if summary.violations == 0 else EXIT_FAIL


def cmd_fib(args: argparse.Namespace) -> int:
    if args.index is not None:
        print(fib(args.index))
    else:
        x, y = fibonacci_pair(args.pair)
        print(f"x={x} y={y}")
    return EXIT_OK


def cmd_tightness(args: argparse.Namespace) -> int:
    records = tightness_fibonacci(args.kmax)
    ok = all(r.m == r.k and r.identity_holds and r.bracket_holds for r in records)
    if args.csv:
        emit_csv(records, args.csv)
        out = sys.stdout
    else:
        sys.stdout.write(render_csv(records))
        out = sys.stderr
    gaps = [r.gap for r in records]
    print(
        f"rows={len(records)} min_gap={min(gaps):.6f} max_gap={max(gaps):.6f} "
        f"exact_checks={_verdict(ok)}",
        file=out,
    )
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="euclid-potential",
        description="Trace the Euclidean algorithm and verify its potential-function iteration bounds exactly.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more diagnostics on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def operands(p: argparse.ArgumentParser) -> None:
        p.add_argument("x", type=_natural)
        p.add_argument("y", type=_natural)

    p = sub.add_parser("gcd", help="print gcd and iteration count")
    operands(p)
    p.set_defaults(func=cmd_gcd)

    p = sub.add_parser("trace", help="print every iteration with both potentials")
    operands(p)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("verify", help="check all bounds for one pair")
    operands(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="check all bounds on every pair 0 <= y < x <= MAX")
    p.add_argument("--max", type=_positive, required=True)
    p.add_argument("--partitions", type=_positive, default=1)
    p.add_argument("--workers", type=_positive, default=1, help="processes used to run partitions")
    p.add_argument("--csv", metavar="PATH")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("fib", help="Fibonacci number or worst-case pair")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--index", type=_natural, metavar="K", help="print F_K")
    g.add_argument("--pair", type=_positive, metavar="K", help="print (F_{K+2}, F_{K+1})")
    p.set_defaults(func=cmd_fib)

    p = sub.add_parser("tightness", help="bound gap on the Fibonacci worst-case family")
    p.add_argument("--kmax", type=_positive, required=True)
    p.add_argument("--csv", metavar="PATH")
    p.set_defaults(func=cmd_tightness)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
